"""Gauss hypergeometric coefficients and the two solution components.

``hypergeom_coeffs`` produces the Taylor coefficients of F(a, b; c; z) from
the term ratio (a+n)(b+n) / ((c+n)(n+1)).  ``component_series`` assembles
one member of the solution pair

    eta^10 * (1728/j)^(s/(2m) + 1/12) * F(s/(2m) + 1/12, s/(2m) + 5/12; s/m + 1; 1728/j)

where s is the signed residue (+n' for the first component, -n' for the
second).  The two recipes are one parameterized formula evaluated at +-n',
and the assembled series is q**((m+s)/2m) (1 + O(q)).

The scalar 1728**outer_power that a literal reading of (1728/j)**outer_power
would contribute is dropped: components are normalized to leading
coefficient 1, and every consumer is scalar-invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import forms
from .errors import InvalidC, InvalidParameters, RecipeInconsistent
from .series import PuiseuxSeries, QSeries, Scalar

ETA_EXPONENT = 10


@dataclass(frozen=True)
class HypergeomParams:
    """Parameters (a, b; c) of a Gauss hypergeometric series."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.c.denominator == 1 and self.c <= 0:
            raise InvalidC(f"lower parameter c = {self.c} is a nonpositive integer")


def hypergeom_coeffs(params: HypergeomParams, n_terms: int) -> QSeries:
    """First ``n_terms`` Taylor coefficients of F(a, b; c; z)."""
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    a, b, c = params.a, params.b, params.c
    out = [Fraction(1)]
    for n in range(n_terms - 1):
        out.append(out[-1] * (a + n) * (b + n) / ((c + n) * (n + 1)))
    return QSeries(out)


@dataclass(frozen=True)
class ComponentRecipe:
    """Everything needed to assemble one solution component.

    ``signed_residue`` is +n' for the first component and -n' for the
    second; all derived fields are rational functions of it, so swapping
    the sign swaps the components.
    """

    m: int
    signed_residue: int
    outer_power: Fraction
    params: HypergeomParams

    def __post_init__(self):
        w = Fraction(self.signed_residue, 2 * self.m)
        expected_outer = w + Fraction(1, 12)
        expected = HypergeomParams(w + Fraction(1, 12), w + Fraction(5, 12), 2 * w + 1)
        if self.outer_power != expected_outer or self.params != expected:
            raise RecipeInconsistent(
                f"recipe fields do not match m={self.m}, "
                f"signed residue {self.signed_residue}"
            )

    @property
    def offset(self) -> Fraction:
        """Leading exponent of the assembled component, (m + s) / 2m."""
        return Fraction(self.m + self.signed_residue, 2 * self.m)


def component_recipe(m: int, n_prime: int, component: str) -> ComponentRecipe:
    """Recipe for the 'first' (+n') or 'second' (-n') component."""
    if component not in ("first", "second"):
        raise InvalidParameters(f"component must be 'first' or 'second', got {component!r}")
    if m < 7 or not 0 < n_prime < m or gcd(m, n_prime) != 1:
        raise InvalidParameters(
            f"need m >= 7 and 0 < n' < m coprime to m, got m={m}, n'={n_prime}"
        )
    s = n_prime if component == "first" else -n_prime
    w = Fraction(s, 2 * m)
    return ComponentRecipe(
        m=m,
        signed_residue=s,
        outer_power=w + Fraction(1, 12),
        params=HypergeomParams(w + Fraction(1, 12), w + Fraction(5, 12), 2 * w + 1),
    )


def component_series(recipe: ComponentRecipe, order: int) -> PuiseuxSeries:
    """Assemble a component as a Puiseux series with ``order`` body terms.

    RecipeInconsistent is raised if the assembled offset or leading
    coefficient disagree with the recipe's own bookkeeping.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    eta_body = forms.eta_power(ETA_EXPONENT, order).body
    jinv = forms.j_inverse(order + 1)
    # unit part of 1728/j = 1728 q * u(q); the shift is exact, valuation is 1
    u = QSeries(jinv.coeffs[1:]) / 1728
    outer_body = u.pow_rational(recipe.outer_power)
    composed = hypergeom_coeffs(recipe.params, order).compose(jinv.truncate(order))
    body = eta_body * outer_body * composed
    result = PuiseuxSeries(Fraction(ETA_EXPONENT, 24) + recipe.outer_power, body)
    if result.offset != recipe.offset:
        raise RecipeInconsistent(
            f"assembled offset {result.offset} differs from (m+s)/2m = {recipe.offset}"
        )
    if result.leading != 1:
        raise RecipeInconsistent(
            f"assembled leading coefficient is {result.leading}, not 1", index=0
        )
    return result
