"""Floating-point route tests: evaluation, disk guard, two-route agreement.

The discriminant value at tau = 2i is cross-checked against mpmath's
q-Pochhammer product — an implementation with no code in common with this
package's series engine.
"""

import cmath
from fractions import Fraction

import mpmath
import pytest

from schwarzian import (
    InvalidParameters,
    NotUpperHalfPlane,
    OutsideDisk,
    PuiseuxSeries,
    QSeries,
    cross_check,
    delta,
    eval_h_hypergeometric,
    eval_qseries,
    solve,
)

F = Fraction

IN_DISK_TAUS = (2j, 1.5j)
ALL_TAUS = (2j, 1.5j, 0.3 + 1.2j)
NUMERIC_GRID = ((7, 1), (8, 3), (9, 2))


def test_constant_series_evaluates_to_constant():
    assert eval_qseries(QSeries([5]), 2j) == 5
    assert eval_qseries(QSeries([0, 0, 0]), 1j) == 0


def test_pure_offset_is_exponential():
    # q^(1/2) at tau = i is exp(2 pi i * i / 2) = e^(-pi)
    p = PuiseuxSeries(F(1, 2), QSeries([1]))
    got = eval_qseries(p, 1j)
    assert abs(got - cmath.exp(-cmath.pi)) < 1e-15


def test_geometric_series_value():
    # sum q^k with q = e^(-4 pi): matches 1/(1-q) up to the q^40 tail
    s = QSeries([1] * 40)
    q = cmath.exp(2j * cmath.pi * 2j).real
    assert abs(eval_qseries(s, 2j) - 1 / (1 - q)) < 1e-15


def test_delta_against_qpochhammer_oracle():
    q = mpmath.exp(2j * mpmath.pi * mpmath.mpc(2j))
    reference = q * mpmath.qp(q) ** 24  # q prod (1-q^n)^24, independent code
    mine = eval_qseries(delta(60), 2j, precision=120)
    assert float(abs(mine - reference) / abs(reference)) < 1e-14


def test_upper_half_plane_enforced():
    with pytest.raises(NotUpperHalfPlane):
        eval_qseries(QSeries([1, 1]), 0.5)
    with pytest.raises(NotUpperHalfPlane):
        eval_qseries(QSeries([1, 1]), -2j)
    with pytest.raises(NotUpperHalfPlane):
        eval_h_hypergeometric(7, 1, -1j)
    with pytest.raises(NotUpperHalfPlane):
        cross_check(7, 1, 0j)


def test_eval_h_parameter_validation():
    with pytest.raises(InvalidParameters):
        eval_h_hypergeometric(6, 1, 2j)
    with pytest.raises(InvalidParameters):
        eval_h_hypergeometric(7, 9, 2j)  # closed form covers 0 < n < m only
    with pytest.raises(InvalidParameters):
        eval_h_hypergeometric(8, 2, 2j)  # not coprime
    with pytest.raises(InvalidParameters):
        eval_h_hypergeometric(7, 1, 2j, margin=0)


def test_outside_disk_near_real_axis():
    # low on the imaginary axis, |1728/j| -> 1 from above the cusp ordering
    with pytest.raises(OutsideDisk):
        eval_h_hypergeometric(7, 1, 0.05j)


def test_outside_disk_at_measured_point():
    # |1728/j(0.3 + 1.2i)| = 1.017565... > 1: the hypergeometric series
    # genuinely diverges there, so the evaluator must refuse the point
    with pytest.raises(OutsideDisk) as info:
        eval_h_hypergeometric(7, 1, 0.3 + 1.2j)
    assert "1.017" in str(info.value)


def test_cross_check_headline_point():
    report = cross_check(7, 1, 2j, 40)
    assert report.rel_error < 1e-10
    assert report.terms_used == 40
    assert report.tail_bound < 1e-100  # |q| = e^(-4 pi) makes the tail tiny


def test_cross_check_in_disk_grid():
    # the green half of the acceptance grid, locked tight
    for m, n in NUMERIC_GRID:
        for tau in IN_DISK_TAUS:
            report = cross_check(m, n, tau, 60)
            assert report.rel_error < 1e-9, (m, n, tau, report.rel_error)


def test_phase_equivariance_everywhere():
    # h(tau + 1) = exp(2 pi i n/m) h(tau) holds for the series route at
    # every grid point, including the one outside the hypergeometric disk
    for m, n in NUMERIC_GRID:
        h = solve(m, n, 60).h
        for tau in ALL_TAUS:
            a = eval_qseries(h, tau)
            b = eval_qseries(h, tau + 1)
            phase = cmath.exp(2j * cmath.pi * n / m)
            assert abs(b - phase * a) / abs(a) < 1e-8


def test_more_terms_tighten_the_match():
    # tau = 1.2i sits mid-disk (|z| ~ 0.63), so truncation error is visible
    # and must fall as the term count doubles
    errors = [cross_check(7, 1, 1.2j, n, precision=120).rel_error for n in (15, 30, 60)]
    assert errors[0] < 1e-4
    assert errors[1] < 1e-7
    assert errors[2] < 1e-13
    assert errors[0] > errors[1] > errors[2]


def test_high_precision_agreement():
    # with 150 bits the two routes agree far below double rounding,
    # so the agreement is structural, not a float coincidence
    report = cross_check(7, 1, 1.5j, 60, precision=150)
    assert report.rel_error < 1e-30


def test_determinism():
    a = cross_check(8, 3, 1.5j, 40)
    b = cross_check(8, 3, 1.5j, 40)
    assert a.via_series == b.via_series
    assert a.via_hypergeom == b.via_hypergeom
    assert a.rel_error == b.rel_error


def test_eval_qseries_term_limit():
    # tau = 0.5i gives |q| = e^(-pi) ~ 0.043, so a 5-term cut is visible
    s = QSeries([1] * 30)
    full = eval_qseries(s, 0.5j)
    short = eval_qseries(s, 0.5j, n_terms=5)
    assert full != short
    assert abs(full - short) < 1e-5
    with pytest.raises(InvalidParameters):
        eval_qseries(s, 0.5j, n_terms=0)
