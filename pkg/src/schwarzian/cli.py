"""Command-line interface: solve, verify, vvmf, eval, selftest.

Every subcommand emits either human-readable text (default) or JSON
(``--format json``).  The JSON payload always has the same top-level shape:

    {"command": ..., "params": {...}, "results": {...}, "checks": [...]}

with every exact rational rendered as a fraction string ("-1/98") and every
complex value as {"re": ..., "im": ...} decimal strings.  Exit status is 0
when all reported checks pass, 1 when a verification check fails, and 2 for
unusable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from . import acceptance, numeric, solver, vvmf
from .errors import (
    InvalidParameters,
    NotUpperHalfPlane,
    OutsideDisk,
    SchwarzianError,
    VerificationError,
)


def _rat(value: Any) -> str:
    return str(Fraction(value))


def _cplx(value: complex) -> dict[str, str]:
    z = complex(value)
    return {"re": repr(z.real), "im": repr(z.imag)}


def _parse_tau(text: str) -> complex:
    cleaned = text.strip().replace(" ", "").replace("i", "j")
    try:
        value = complex(cleaned)
    except ValueError:
        raise InvalidParameters(
            f"could not parse tau {text!r}; expected something like '0.3+1.2i'"
        ) from None
    return value


def _check(name: str, passed: bool, detail: str) -> dict[str, Any]:
    return {"name": name, "pass": passed, "detail": detail}


def _emit(payload: dict[str, Any], fmt: str) -> int:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"{payload['command']}  " + "  ".join(
            f"{k}={v}" for k, v in payload["params"].items()
        ))
        for key, value in payload["results"].items():
            if isinstance(value, list):
                print(f"{key}:")
                for item in value:
                    print(f"  {item}")
            elif isinstance(value, dict):
                print(f"{key}: " + ", ".join(f"{k}={v}" for k, v in value.items()))
            else:
                print(f"{key}: {value}")
        for check in payload["checks"]:
            mark = "PASS" if check["pass"] else "FAIL"
            print(f"[{mark}] {check['name']} - {check['detail']}")
    return 0 if all(c["pass"] for c in payload["checks"]) else 1


def _cmd_solve(args: argparse.Namespace) -> int:
    params = {"m": args.m, "n": args.n, "terms": args.terms}
    checks: list[dict[str, Any]] = []
    results: dict[str, Any] = {}
    try:
        bundle = solver.solve(args.m, args.n, args.terms)
    except VerificationError as exc:
        checks.append(
            _check("solution-verification", False, f"{type(exc).__name__}: {exc}")
        )
    else:
        results = {
            "offset": _rat(bundle.h.offset),
            "n_prime": bundle.n_prime,
            "raises": bundle.r,
            "weight": int(bundle.form.weight),
            "h_coefficients": [_rat(c) for c in bundle.h.body.coeffs],
            "schwarz_constant": _rat(bundle.schwarz_constant),
            "ode_parameter": _rat(bundle.ode_parameter),
            "wronskians": [
                {"level": lvl, "constant": _rat(c), "delta_power": e}
                for lvl, (c, e) in enumerate(bundle.wronskians)
            ],
            "note": solver.CONVENTION_NOTE,
        }
        checks.append(
            _check(
                "solution-verification",
                True,
                f"Wronskian, Schwarzian and ODE identities verified exactly "
                f"through order {args.terms}",
            )
        )
    payload = {
        "command": "solve",
        "params": params,
        "results": results,
        "checks": checks,
    }
    return _emit(payload, args.format)


def _cmd_verify(args: argparse.Namespace) -> int:
    params = {"m": args.m, "n": args.n, "terms": args.terms}
    checks: list[dict[str, Any]] = []
    n_prime = args.n % args.m
    r = (args.n - n_prime) // args.m
    rep = vvmf.ReprData(args.m, n_prime)

    form = vvmf.minimal_form(rep, args.terms + r)
    shape_ok = (
        form.weight == 5
        and form.first.offset == rep.exp_first
        and form.second.offset == rep.exp_second
        and form.first.leading == 1
        and form.second.leading == 1
    )
    checks.append(
        _check(
            "minimal-form-shape",
            shape_ok,
            f"weight {form.weight}, exponents {form.first.offset}, {form.second.offset}",
        )
    )

    level = 0
    try:
        wronskians = [vvmf.wronskian_check(form)]
        for level in range(1, r + 1):
            form = vvmf.raise_weight(form)
            wronskians.append(vvmf.wronskian_check(form))
        detail = "; ".join(
            f"level {lvl}: c={c}, Delta^{e}" for lvl, (c, e) in enumerate(wronskians)
        )
        checks.append(_check("wronskian-delta-power", True, detail))
    except VerificationError as exc:
        checks.append(
            _check(
                "wronskian-delta-power",
                False,
                f"level {level}: {type(exc).__name__}: {exc}",
            )
        )

    try:
        bundle = solver.solve(args.m, args.n, args.terms)
        expected = -Fraction(args.n, args.m) ** 2 / 2
        checks.append(
            _check(
                "schwarzian-proportionality",
                bundle.schwarz_constant == expected,
                f"{{h}} = {bundle.schwarz_constant} * E4, expected {expected}",
            )
        )
        checks.append(
            _check(
                "ode-solutions",
                True,
                f"both solutions satisfy D^2 y + ({bundle.ode_parameter}) E4 y = 0 "
                f"and y1/y2 = h",
            )
        )
    except VerificationError as exc:
        checks.append(
            _check(
                "schwarzian-proportionality",
                False,
                f"{type(exc).__name__}: {exc}",
            )
        )

    payload = {
        "command": "verify",
        "params": params,
        "results": {"n_prime": n_prime, "raises": r},
        "checks": checks,
    }
    return _emit(payload, args.format)


def _cmd_vvmf(args: argparse.Namespace) -> int:
    params = {"m": args.m, "n": args.n, "terms": args.terms}
    n_prime = args.n % args.m
    r = (args.n - n_prime) // args.m
    rep = vvmf.ReprData(args.m, n_prime)
    form = vvmf.minimal_form(rep, args.terms + r)

    c1, c2 = vvmf.raising_constants(form)
    c2_closed = vvmf.c2_closed_form(args.m, n_prime)
    c1_candidate = vvmf.c1_closed_form_candidate(args.m, n_prime)

    levels = []
    checks: list[dict[str, Any]] = []
    current = form
    try:
        for level in range(r + 1):
            if level:
                current = vvmf.raise_weight(current)
            c, e = vvmf.wronskian_check(current)
            levels.append(
                {
                    "level": level,
                    "weight": int(current.weight),
                    "first_exponent": _rat(current.first.offset),
                    "second_exponent": _rat(current.second.offset),
                    "first_leading": _rat(current.first.leading),
                    "second_leading": _rat(current.second.leading),
                    "wronskian_constant": _rat(c),
                    "delta_power": e,
                }
            )
        checks.append(
            _check(
                "wronskian-delta-power",
                True,
                f"levels 0..{r} proportional to the stated discriminant powers",
            )
        )
    except VerificationError as exc:
        checks.append(
            _check("wronskian-delta-power", False, f"{type(exc).__name__}: {exc}")
        )

    checks.append(
        _check(
            "second-raising-ratio",
            c2 == c2_closed,
            f"computed {c2}, closed form 12n'/(m+6n') = {c2_closed}",
        )
    )

    results = {
        "n_prime": n_prime,
        "raises": r,
        "weight": int(5 + 6 * r),
        "levels": levels,
        "raising": {
            "second_ratio": _rat(c2),
            "second_ratio_closed_form": _rat(c2_closed),
            "first_ratio": _rat(c1),
            "first_ratio_candidate": _rat(c1_candidate),
            "candidate_agrees": bool(c1 == c1_candidate),
        },
    }
    payload = {
        "command": "vvmf",
        "params": params,
        "results": results,
        "checks": checks,
    }
    return _emit(payload, args.format)


def _cmd_eval(args: argparse.Namespace) -> int:
    tau = _parse_tau(args.tau)
    params = {
        "m": args.m,
        "n": args.n,
        "terms": args.terms,
        "tau": args.tau,
    }
    if args.precision is not None:
        params["precision"] = args.precision
    checks: list[dict[str, Any]] = []
    results: dict[str, Any] = {}
    try:
        report = numeric.cross_check(
            args.m, args.n, tau, args.terms, precision=args.precision
        )
    except OutsideDisk as exc:
        checks.append(_check("routes-agree", False, str(exc)))
    else:
        results = {
            "via_series": _cplx(report.via_series),
            "via_hypergeom": _cplx(report.via_hypergeom),
            "rel_error": repr(report.rel_error),
            "terms_used": report.terms_used,
            "tail_bound": repr(report.tail_bound),
        }
        checks.append(
            _check(
                "routes-agree",
                report.rel_error < args.tolerance,
                f"rel_error {report.rel_error:.3e} vs tolerance {args.tolerance:g}",
            )
        )
    payload = {
        "command": "eval",
        "params": params,
        "results": results,
        "checks": checks,
    }
    return _emit(payload, args.format)


def _cmd_selftest(args: argparse.Namespace) -> int:
    outcomes = acceptance.run_all()
    payload = {
        "command": "selftest",
        "params": {},
        "results": {
            "passed": sum(1 for o in outcomes if o.passed),
            "failed": sum(1 for o in outcomes if not o.passed),
        },
        "checks": [_check(o.name, o.passed, o.detail) for o in outcomes],
    }
    return _emit(payload, args.format)


def _add_common(sub: argparse.ArgumentParser, with_mn: bool = True) -> None:
    if with_mn:
        sub.add_argument("--m", type=int, required=True, help="denominator, >= 7")
        sub.add_argument(
            "--n", type=int, required=True, help="numerator, coprime to m"
        )
        sub.add_argument(
            "--terms", type=int, default=40, help="tracked series coefficients"
        )
    sub.add_argument(
        "--format",
        choices=("json", "text"),
        default="text",
        help="output format",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schwarzian",
        description=(
            "Exact hypergeometric solutions of the modular Schwarzian "
            "equation {h, tau} = s E4, with every identity re-verified in "
            "rational arithmetic"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="construct and verify h for n/m")
    _add_common(p_solve)
    p_solve.set_defaults(func=_cmd_solve)

    p_verify = sub.add_parser("verify", help="re-run each identity check for n/m")
    _add_common(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_vvmf = sub.add_parser(
        "vvmf", help="inspect the vector form: exponents, Wronskians, raising"
    )
    _add_common(p_vvmf)
    p_vvmf.set_defaults(func=_cmd_vvmf)

    p_eval = sub.add_parser(
        "eval", help="evaluate h at tau by series and closed form, compare"
    )
    _add_common(p_eval)
    p_eval.add_argument(
        "--tau", required=True, help="evaluation point, e.g. '2i' or '0.3+1.2i'"
    )
    p_eval.add_argument(
        "--precision",
        type=int,
        default=None,
        help="bits of working precision (default: complex doubles)",
    )
    p_eval.add_argument(
        "--tolerance",
        type=float,
        default=1e-9,
        help="relative agreement required between the two routes",
    )
    p_eval.set_defaults(func=_cmd_eval)

    p_self = sub.add_parser("selftest", help="run the full acceptance battery")
    _add_common(p_self, with_mn=False)
    p_self.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidParameters, NotUpperHalfPlane) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SchwarzianError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
