"""Shared building blocks: exact coefficients and dispatched zeta differences."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from mpmath import mpf, factorial

from ..exactcomb import bernoulli_poly, sgsp_eval
from ..specfun import constant, polygamma, zeta_half_diff, zeta_sderiv_half_diff

HALF = Fraction(1, 2)


def to_mpf(q: Fraction) -> mpf:
    return mpf(q.numerator) / q.denominator


@lru_cache(maxsize=4096)
def sgsp_weight(k: int, m: int, x: Fraction) -> Fraction:
    """``(-1/2)^k P_k(m, x)`` as an exact rational."""
    return (-HALF) ** k * sgsp_eval(k, m, x)


def zeta_diff(order: int, x: Fraction) -> mpf:
    """``zeta(order, x) - zeta(order, x + 1/2)``; order 1 means the limit."""
    return zeta_half_diff(order, to_mpf(x))


def zeta_sderiv_diff(order: int, x: Fraction) -> mpf:
    """``zeta'(order, x) - zeta'(order, x + 1/2)``; order 1 means the limit."""
    return zeta_sderiv_half_diff(order, to_mpf(x))


def zeta_diff_no_zeta(order: int, x: Fraction):
    """``zeta(order, x) - zeta(order, x + 1/2)`` without evaluating any zeta function.

    Nonpositive orders give an exact Fraction from Bernoulli polynomials,
    order 1 the digamma difference, higher orders a polygamma difference.
    """
    if order <= 0:
        n = -order
        return (bernoulli_poly(n + 1, x + HALF) - bernoulli_poly(n + 1, x)) / (n + 1)
    xr = to_mpf(x)
    if order == 1:
        return polygamma(0, xr + mpf(1) / 2) - polygamma(0, xr)
    return (-1) ** order / factorial(order - 1) * (polygamma(order - 1, xr) - polygamma(order - 1, xr + mpf(1) / 2))


def as_mpf(v) -> mpf:
    return to_mpf(v) if isinstance(v, Fraction) else v


def four_g_over_pi() -> mpf:
    return 4 * constant("catalan") / constant("pi")
