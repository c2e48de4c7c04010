"""Two-component vector forms: construction, weight raising, Wronskian checks.

The minimal form for parameters (m, n') has weight 5, component leading
exponents (m + n')/2m and (m - n')/2m, and both leading coefficients 1.
Raising multiplies by E6 and subtracts (1/pivot) E4 D_k, where the pivot
lambda = first.offset - weight/12 is chosen so the first component's leading
coefficient cancels exactly; its exponent moves up by 1 while the second
component's exponent stays put.  Each raise adds 6 to the weight.

The Wronskian W(F) = D(f1) f2 - f1 D(f2) of a form with exponents summing to
the integer e must be a nonzero constant multiple of Delta**e; wronskian_check
verifies that coefficient by coefficient and returns (c, e).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import forms, hypergeometric
from .errors import (
    InvalidParameters,
    LeadingCancellation,
    NotProportionalToDeltaPower,
    PivotVanishes,
)
from .series import PuiseuxSeries

MINIMAL_WEIGHT = Fraction(5)
_PRIMITIVE_SIXTH = (Fraction(1, 6), Fraction(5, 6))


@dataclass(frozen=True)
class ReprData:
    """Parameters (m, n') of the two-dimensional representation.

    The component leading exponents are exp_first = (m + n')/2m and
    exp_second = (m - n')/2m.  They are distinct, sum to 1 (so their product
    of multipliers is a sixth root of unity trivially), and their difference
    n'/m is never congruent to 1/6 or 5/6 mod 1 when m >= 7 and gcd = 1.
    """

    m: int
    n_prime: int

    def __post_init__(self):
        if not isinstance(self.m, int) or not isinstance(self.n_prime, int):
            raise InvalidParameters("m and n' must be integers")
        if self.m < 7:
            raise InvalidParameters(f"m must be >= 7, got {self.m}")
        if not 0 < self.n_prime < self.m:
            raise InvalidParameters(
                f"n' must satisfy 0 < n' < m, got n'={self.n_prime}, m={self.m}"
            )
        if gcd(self.m, self.n_prime) != 1:
            raise InvalidParameters(
                f"m={self.m} and n'={self.n_prime} must be coprime"
            )
        ratio = Fraction(self.n_prime, self.m) % 1
        assert ratio not in _PRIMITIVE_SIXTH, "n'/m hit a primitive sixth root"
        assert self.exp_first != self.exp_second
        assert self.exp_first + self.exp_second == 1

    @property
    def exp_first(self) -> Fraction:
        return Fraction(self.m + self.n_prime, 2 * self.m)

    @property
    def exp_second(self) -> Fraction:
        return Fraction(self.m - self.n_prime, 2 * self.m)


@dataclass(frozen=True)
class VectorForm:
    """A two-component form of weight 5 + 6*level."""

    first: PuiseuxSeries
    second: PuiseuxSeries
    weight: Fraction
    rep: ReprData
    level: int

    def __post_init__(self):
        assert self.weight == MINIMAL_WEIGHT + 6 * self.level
        assert self.first.offset == self.rep.exp_first + self.level
        assert self.second.offset == self.rep.exp_second


def minimal_form(rep: ReprData, order: int) -> VectorForm:
    """The weight-5 form with unit leading coefficients for both components."""
    first = hypergeometric.component_series(
        hypergeometric.component_recipe(rep.m, rep.n_prime, "first"), order
    )
    second = hypergeometric.component_series(
        hypergeometric.component_recipe(rep.m, rep.n_prime, "second"), order
    )
    return VectorForm(first=first, second=second, weight=MINIMAL_WEIGHT, rep=rep, level=0)


def raise_weight(form: VectorForm) -> VectorForm:
    """One weight-raising step: E6 F - (1/pivot) E4 D_weight F, componentwise.

    The pivot equals the first component's exponent minus weight/12, which
    kills that component's leading coefficient exactly; the new leading
    exponent is first.offset + 1 and the second component's exponent is
    unchanged.  LeadingCancellation is raised if either fails, and the
    components are returned unnormalized so the raising constants stay
    visible as the new leading coefficients.
    """
    pivot = form.first.offset - form.weight / 12
    if pivot == 0:
        raise PivotVanishes(f"pivot vanishes at weight {form.weight}")

    def step(component: PuiseuxSeries) -> PuiseuxSeries:
        order = component.order
        e4 = forms.eisenstein(4, order)
        e6 = forms.eisenstein(6, order)
        serre = forms.serre_derivative(component, form.weight)
        return component * e6 - serre * e4 * (1 / pivot)

    new_first = step(form.first)
    new_second = step(form.second)
    if new_first.is_zero() or new_first.offset != form.first.offset + 1:
        raise LeadingCancellation(
            f"first component moved to exponent "
            f"{None if new_first.is_zero() else new_first.offset}, "
            f"expected {form.first.offset + 1}",
            index=0,
        )
    if new_second.is_zero() or new_second.offset != form.second.offset:
        raise LeadingCancellation(
            "second component leading coefficient vanished under raising", index=0
        )
    return VectorForm(
        first=new_first,
        second=new_second,
        weight=form.weight + 6,
        rep=form.rep,
        level=form.level + 1,
    )


def wronskian(form: VectorForm) -> PuiseuxSeries:
    """W(F) = D(f1) f2 - f1 D(f2)."""
    return form.first.derive() * form.second - form.first * form.second.derive()


def wronskian_check(form: VectorForm) -> tuple[Fraction, int]:
    """Verify W(F) = c Delta**e with c nonzero and e = sum of the exponents.

    Returns (c, e) on success; raises NotProportionalToDeltaPower with the
    index of the first failing coefficient otherwise.
    """
    e_frac = form.first.offset + form.second.offset
    if e_frac.denominator != 1 or e_frac < 1:
        raise NotProportionalToDeltaPower(
            f"exponent sum {e_frac} is not a positive integer", index=0
        )
    e = int(e_frac)
    w = wronskian(form)
    if w.is_zero():
        raise NotProportionalToDeltaPower(
            "Wronskian vanishes to working order", index=0
        )
    delta_power = PuiseuxSeries(e, forms.eta_power(24, w.order).body ** e)
    ratio = w / delta_power
    if ratio.offset != 0:
        raise NotProportionalToDeltaPower(
            f"Wronskian leading exponent is {w.offset}, expected {e}", index=0
        )
    for i in range(1, ratio.order):
        if ratio.body[i]:
            raise NotProportionalToDeltaPower(
                f"W / Delta**{e} has nonconstant coefficient {ratio.body[i]} at q^{i}",
                index=i,
            )
    return ratio.leading, e


def c2_closed_form(m: int, n_prime: int) -> Fraction:
    """Exact second-component raising constant at level 0: 12n'/(m + 6n')."""
    return Fraction(12 * n_prime, m + 6 * n_prime)


def c1_closed_form_candidate(m: int, n_prime: int) -> Fraction:
    """Conjectured closed form for the first-component raising constant.

    Kept only for comparison: the series computation disagrees with it (for
    example (7, 2) gives -752 from the series, 7333/19 from this formula),
    so callers must treat it as a candidate, never as ground truth.
    """
    return Fraction(
        377 * m * m + 2004 * m * n_prime - 2466 * n_prime * n_prime,
        (m - n_prime) * (m + 6 * n_prime),
    )


def raising_constants(form: VectorForm) -> tuple[Fraction, Fraction]:
    """(c1, c2) for one raising step from ``form``.

    The constants are the new leading coefficients divided by the old ones,
    so at level 0 (unit leading coefficients) they are the new leading
    coefficients themselves.
    """
    raised = raise_weight(form)
    return (
        raised.first.leading / form.first.leading,
        raised.second.leading / form.second.leading,
    )
