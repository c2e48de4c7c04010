"""Floating-point evaluation and the series-vs-closed-form cross-check.

Two independent evaluation routes for the verified solution h:

* summing its q-expansion at q = exp(2 pi i tau);
* the closed hypergeometric form: with z = 1728/j(tau) and each component
  F_k = 2F1(a_k, b_k; c_k; z), the ratio h = z**(n/m) F_1(z) / F_2(z) up to
  the fixed scalar 1728**(n/m) that unit-normalization removes.

The hypergeometric route only converges for |z| < 1, i.e. sufficiently far
up the upper half plane; ``eval_h_hypergeometric`` refuses points outside
that disk (no analytic continuation is attempted) and reports the measured
|z| in the exception.

``precision=None`` computes in ordinary complex doubles; an integer selects
mpmath with that many bits of working precision.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any, Callable, Sequence

from . import solver
from .errors import (
    InvalidParameters,
    NotUpperHalfPlane,
    NumericOverflow,
    OutsideDisk,
)
from .forms import j_inverse
from .hypergeometric import component_recipe, hypergeom_coeffs
from .series import PuiseuxSeries, QSeries

_OVERFLOW = 1e300


class _Backend:
    """Uniform complex arithmetic over cmath doubles or mpmath bits."""

    def __init__(self, precision: int | None):
        if precision is None:
            self.exp: Callable[[Any], Any] = cmath.exp
            self.log: Callable[[Any], Any] = cmath.log
            self._mp = None
        else:
            import mpmath

            if precision < 8:
                raise InvalidParameters("precision must be at least 8 bits")
            mp = mpmath.mp.clone()
            mp.prec = precision
            self._mp = mp
            self.exp = mp.exp
            self.log = mp.log

    def number(self, value: Any) -> Any:
        if self._mp is None:
            if isinstance(value, Fraction):
                return complex(value)
            return complex(value)
        if isinstance(value, Fraction):
            return self._mp.mpf(value.numerator) / self._mp.mpf(value.denominator)
        if isinstance(value, complex):
            return self._mp.mpc(value.real, value.imag)
        return self._mp.mpmathify(value)

    def to_complex(self, value: Any) -> complex:
        return complex(value)

    def pi(self) -> Any:
        if self._mp is None:
            return cmath.pi
        return self._mp.pi


def _check_tau(tau: complex) -> complex:
    tau = complex(tau)
    if not tau.imag > 0:
        raise NotUpperHalfPlane(f"tau = {tau} has nonpositive imaginary part")
    return tau


def _horner(coeffs: Sequence[Fraction], q: Any, backend: _Backend) -> Any:
    acc = backend.number(0)
    for c in reversed(coeffs):
        acc = acc * q + backend.number(c)
    return acc


def eval_qseries(
    f: QSeries | PuiseuxSeries,
    tau: complex,
    n_terms: int | None = None,
    precision: int | None = None,
) -> complex | Any:
    """Evaluate a (fractional-power) q-series at q = exp(2 pi i tau).

    The fractional factor q**offset is computed as exp(offset * 2 pi i tau)
    — the branch every q-expansion here is defined with — rather than by
    powering a wrapped q.  Raises NotUpperHalfPlane off the domain and
    NumericOverflow if the result leaves the double range.
    """
    tau = _check_tau(tau)
    backend = _Backend(precision)
    if isinstance(f, QSeries):
        f = PuiseuxSeries.from_qseries(f)
    coeffs = f.body.coeffs
    if n_terms is not None:
        if n_terms < 1:
            raise InvalidParameters("n_terms must be >= 1")
        coeffs = coeffs[:n_terms]
    two_pi_i = backend.number(2j) * backend.pi()
    q = backend.exp(two_pi_i * backend.number(tau))
    value = _horner(coeffs, q, backend)
    if not f.is_zero() and f.offset:
        value = value * backend.exp(backend.number(f.offset) * two_pi_i * backend.number(tau))
    if precision is None and (
        abs(value.real) > _OVERFLOW or abs(value.imag) > _OVERFLOW
    ):
        raise NumericOverflow(f"|value| exceeds {_OVERFLOW:g} at tau = {tau}")
    return value


def _eval_z(m_terms: int, tau: complex, backend: _Backend) -> Any:
    """z = 1728/j(tau) by summing its integer q-expansion."""
    series = j_inverse(m_terms)
    two_pi_i = backend.number(2j) * backend.pi()
    q = backend.exp(two_pi_i * backend.number(tau))
    return _horner(series.coeffs, q, backend)


def eval_h_hypergeometric(
    m: int,
    n: int,
    tau: complex,
    n_terms: int = 60,
    precision: int | None = None,
    margin: float = 0.05,
) -> complex | Any:
    """Closed-form h(tau), normalized to match the unit-leading q-series.

    Computes z = 1728/j(tau), refuses |z| >= 1 - margin (OutsideDisk, with
    the measured |z| in the message), then returns

        exp((n/m) (Log z - log 1728)) * F_first(z) / F_second(z)

    with both hypergeometric factors summed to ``n_terms`` terms from their
    exact rational coefficients.  Log is the principal branch; dividing out
    1728**(n/m) matches the series normalization h = q**(n/m) (1 + O(q)).
    Only 0 < n < m is meaningful here (the closed form covers one sheet).
    """
    if not isinstance(m, int) or not isinstance(n, int):
        raise InvalidParameters("m and n must be integers")
    if m < 7 or not 0 < n < m or gcd(m, n) != 1:
        raise InvalidParameters(
            f"need m >= 7 and 0 < n < m coprime, got m={m}, n={n}"
        )
    if not 0 < margin < 1:
        raise InvalidParameters("margin must lie in (0, 1)")
    tau = _check_tau(tau)
    backend = _Backend(precision)

    z = _eval_z(n_terms, tau, backend)
    radius = abs(backend.to_complex(z))
    if radius >= 1 - margin:
        raise OutsideDisk(
            f"|1728/j(tau)| = {radius:.6f} >= {1 - margin:g} at tau = {tau}; "
            "the hypergeometric series route does not converge there"
        )

    first = component_recipe(m, n, "first")
    second = component_recipe(m, n, "second")
    f1 = _horner(hypergeom_coeffs(first.params, n_terms).coeffs, z, backend)
    f2 = _horner(hypergeom_coeffs(second.params, n_terms).coeffs, z, backend)
    exponent = backend.number(Fraction(n, m))
    prefactor = backend.exp(exponent * (backend.log(z) - backend.log(backend.number(1728))))
    return prefactor * f1 / f2


@dataclass(frozen=True)
class EvalReport:
    """Side-by-side evaluation of h by its two independent routes."""

    tau: complex
    via_series: complex
    via_hypergeom: complex
    rel_error: float
    terms_used: int
    tail_bound: float


def _tail_estimate(h: PuiseuxSeries, q_abs: float) -> float:
    """Geometric tail heuristic from the last two tracked coefficients.

    If the trailing coefficient ratio times |q| is rho < 1, bound the tail
    by last_term * rho / (1 - rho); otherwise report the last term's
    magnitude.  A heuristic, not a certificate.
    """
    coeffs = h.body.coeffs
    if len(coeffs) < 2 or not coeffs[-1] or not coeffs[-2]:
        return 0.0
    last = abs(float(coeffs[-1])) * q_abs ** (len(coeffs) - 1 + float(h.offset))
    rho = abs(float(coeffs[-1]) / float(coeffs[-2])) * q_abs
    if rho < 1:
        return last * rho / (1 - rho)
    return last


def cross_check(
    m: int,
    n: int,
    tau: complex,
    n_terms: int = 60,
    precision: int | None = None,
) -> EvalReport:
    """Evaluate h both ways at tau and report the relative discrepancy.

    The q-expansion comes from the fully verified ``solver.solve`` bundle;
    the closed form from ``eval_h_hypergeometric``.  Agreement of the two
    is the end-to-end numerical check of the whole construction.
    """
    tau = _check_tau(tau)
    bundle = solver.solve(m, n, n_terms)
    via_series = eval_qseries(bundle.h, tau, precision=precision)
    via_hyper = eval_h_hypergeometric(m, n, tau, n_terms, precision=precision)
    # difference in the working precision, so high-precision runs can
    # report discrepancies far below double rounding
    scale = max(abs(via_series), abs(via_hyper))
    rel = float(abs(via_series - via_hyper) / scale) if scale else 0.0
    a = complex(via_series)
    b = complex(via_hyper)
    q_abs = abs(cmath.exp(2j * cmath.pi * tau))
    return EvalReport(
        tau=tau,
        via_series=a,
        via_hypergeom=b,
        rel_error=rel,
        terms_used=n_terms,
        tail_bound=_tail_estimate(bundle.h, q_abs),
    )
