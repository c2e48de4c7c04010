"""Acceptance gate: one test per criterion, one pass/fail line each.

Every criterion runs at its stated tolerance and time budget via the
functions in ``schwarzian.acceptance`` (the same battery behind the CLI's
``selftest``).  Each test prints its ``[PASS]/[FAIL] name: detail`` line
and asserts the verdict, so the pytest report carries exactly one line per
criterion.

Criterion 7 (numeric-cross-check) FAILS BY DESIGN on the stated tau grid:
the grid includes tau = 0.3 + 1.2i, where |1728/j(tau)| = 1.017565... > 1.
The closed hypergeometric form is a power series in 1728/j and genuinely
diverges there; this package does not analytically continue it, so the
evaluator refuses the point (OutsideDisk) rather than returning a value it
cannot stand behind.  The criterion still runs the full grid: the six
in-disk points must agree to 1e-9 (they do, see the detail line and
tests/test_numeric.py, which locks that), phase equivariance must hold at
all nine points (it does), and the three out-of-disk points are reported
with their measured |z|.  The honest verdict for the criterion as stated
is therefore FAIL, and this file says so rather than hiding it.
"""

import pytest

from schwarzian import acceptance


def _report(result: acceptance.CheckResult) -> None:
    mark = "PASS" if result.passed else "FAIL"
    print(f"[{mark}] {result.name}: {result.detail}")
    assert result.passed, f"{result.name}: {result.detail}"


def test_criterion_1_classical_identities():
    _report(acceptance.check_classical_identities(order=100, budget=10.0))


def test_criterion_2_minimal_form_shape():
    _report(acceptance.check_minimal_form_shape(order=40))


def test_criterion_3_wronskian_delta_power():
    _report(acceptance.check_wronskian_delta_power(order=40))


def test_criterion_4_raising_constants():
    _report(acceptance.check_raising_constants(order=40))


def test_criterion_5_schwarzian_proportionality():
    _report(acceptance.check_schwarzian_proportionality(order=40, budget=30.0))


def test_criterion_6_ode_solutions():
    _report(acceptance.check_ode_solutions(order=40))


@pytest.mark.slow
def test_criterion_7_numeric_cross_check():
    # Expected to FAIL: the stated grid contains three evaluation points
    # with |1728/j(tau)| > 1 (tau = 0.3 + 1.2i for each of the three (m, n)
    # pairs), where the closed hypergeometric series diverges and the
    # evaluator refuses to fabricate a value.  The six in-disk points all
    # agree to 1e-9 and phase equivariance holds at all nine points; the
    # per-point breakdown is in the detail line below.
    _report(acceptance.check_numeric_cross_check(n_terms=60, tolerance=1e-9))


@pytest.mark.slow
def test_criterion_8_seeded_bug_sensitivity():
    _report(acceptance.check_seeded_bug_sensitivity(order=40, max_index=5))
