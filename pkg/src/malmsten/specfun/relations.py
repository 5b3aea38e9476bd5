"""Difference and limit relations between Hurwitz zeta, polygamma and Lerch values.

Each function returns ``(lhs, rhs)`` computed along two different routes so
callers can compare them.
"""

from __future__ import annotations

import math
from fractions import Fraction

from mpmath import mp, mpf, mpc, log, pi, expjpi, factorial

from ..context import precise, to_real, as_fraction
from ..errors import DomainError
from ..exactcomb import bernoulli_poly
from .constants import constant
from .gamma import log_gamma, polygamma
from .hurwitz import (
    _euler_maclaurin,
    hurwitz_zeta,
    hurwitz_zeta_sderiv,
    lerch_phi_neg1,
    zeta_sderiv_half_diff,
)
from .polylog import polylog_unit_circle

__all__ = [
    "zeta_diff_lerch",
    "zeta_diff_bernoulli",
    "zeta_diff_polygamma",
    "zeta_sderiv_diff_at_zero",
    "zeta_sderiv_reflection",
    "zeta_sderiv_diff_half_integers",
    "beta_deriv_zero_closed_form",
    "beta_deriv_zero_reflection",
]

HALF = mpf(1) / 2


@precise
def zeta_diff_lerch(a, b) -> tuple[mpf, mpf]:
    """``zeta(a,b) - zeta(a,b+1/2)`` against ``2^a Phi(-1, a, 2b)`` (series route)."""
    a, b = to_real(a), to_real(b)
    if a == 1:
        raise DomainError("the zeta difference is taken for a != 1")
    lhs = hurwitz_zeta(a, b) - hurwitz_zeta(a, b + HALF)
    rhs = 2 ** a * lerch_phi_neg1(a, 2 * b, method="series")
    return +lhs, +rhs


@precise
def zeta_diff_bernoulli(n: int, x) -> tuple[mpf, Fraction | mpf]:
    """``zeta(-n,x) - zeta(-n,x+1/2)`` against ``[B_(n+1)(x+1/2) - B_(n+1)(x)]/(n+1)``.

    The right side is an exact Fraction when ``x`` is rational.
    """
    xq = as_fraction(x) if not isinstance(x, str) else Fraction(x)
    xr = to_real(x)
    lhs = hurwitz_zeta(-n, xr) - hurwitz_zeta(-n, xr + HALF)
    if xq is None:
        raise DomainError("x must be rational")
    rhs = (bernoulli_poly(n + 1, xq + Fraction(1, 2)) - bernoulli_poly(n + 1, xq)) / (n + 1)
    return +lhs, rhs


@precise
def zeta_diff_polygamma(n: int, x) -> tuple[mpf, mpf]:
    """``zeta(n,x) - zeta(n,x+1/2)`` against ``(-1)^n/(n-1)! [psi_(n-1)(x) - psi_(n-1)(x+1/2)]``, ``n >= 2``."""
    if n < 2:
        raise DomainError("needs n >= 2")
    x = to_real(x)
    lhs = hurwitz_zeta(n, x) - hurwitz_zeta(n, x + HALF)
    rhs = (-1) ** n / factorial(n - 1) * (polygamma(n - 1, x) - polygamma(n - 1, x + HALF))
    return +lhs, +rhs


@precise
def zeta_sderiv_diff_at_zero(x) -> tuple[mpf, mpf]:
    """``zeta'(0,x) - zeta'(0,x+1/2)`` against ``ln Gamma(x) - ln Gamma(x+1/2)``."""
    x = to_real(x)
    lhs = hurwitz_zeta_sderiv(0, x) - hurwitz_zeta_sderiv(0, x + HALF)
    rhs = log_gamma(x) - log_gamma(x + HALF)
    return +lhs, +rhs


@precise
def zeta_sderiv_reflection(n: int, z) -> tuple[mpf, mpc]:
    """Reflection of ``zeta'(-n, z)`` through the polylogarithm, ``z`` in (0, 1)::

        zeta'(-n,z) + (-1)^n zeta'(-n,1-z)
            = pi i B_(n+1)(z)/(n+1) + n! e^(-pi i n/2) (2 pi)^-n Li_(n+1)(e^(2 pi i z))

    The right side is complex; its imaginary part should vanish.
    """
    zq = as_fraction(z) if not isinstance(z, str) else Fraction(z)
    zr = to_real(z)
    if not 0 < zr < 1:
        raise DomainError("z must lie in (0, 1)")
    lhs = hurwitz_zeta_sderiv(-n, zr) + (-1) ** n * hurwitz_zeta_sderiv(-n, 1 - zr)
    if zq is not None:
        b = bernoulli_poly(n + 1, zq) / (n + 1)
        bern = mpf(b.numerator) / b.denominator
    else:
        bern = sum(math.comb(n + 1, k) * _bern_num(k) * zr ** (n + 1 - k) for k in range(n + 2)) / (n + 1)
    rhs = mpc(0, pi * bern) + factorial(n) * expjpi(-mpf(n) / 2) / (2 * pi) ** n * polylog_unit_circle(n + 1, zr)
    return +lhs, +rhs


def _bern_num(k):
    from ..exactcomb import bernoulli_number

    b = bernoulli_number(k)
    return mpf(b.numerator) / b.denominator


@precise
def zeta_sderiv_diff_half_integers(m: int, n: int, printed: bool = False) -> tuple[mpf, mpf]:
    """``zeta'(n, m/2) - zeta'(n, (m+1)/2)`` against its closed form, ``m, n >= 1``.

    The closed form is::

        (-1)^n ln2/(n-1)! [psi_(n-1)(m/2) - psi_(n-1)((m+1)/2)] + q(m, n)
            + 2^n (-1)^m sum_{k=1}^{m-1} (-1)^k ln k / k^n

    with ``q(m,1) = (-1)^m (ln^2 2 - 2 gamma ln 2)`` and, for ``n >= 2``,
    ``q(m,n) = (-1)^(m-1) [2 ln2 zeta(n) + (2^n - 2) zeta'(n)]``.

    ``printed=True`` evaluates a variant that puts ``(-1)^(m-1)`` on the
    ``zeta(n)`` term only and drops the finite sum when ``n = 1``; it is wrong
    for even ``m`` with ``n >= 2`` and kept for comparison only.
    """
    if m < 1 or n < 1:
        raise DomainError("needs m, n >= 1")
    ln2 = constant("ln2")
    g = constant("euler_gamma")
    lhs = zeta_sderiv_half_diff(n, mpf(m) / 2)
    sm = -1 if (m - 1) % 2 else 1  # (-1)^(m-1)
    psi_part = (-1) ** n * ln2 / factorial(n - 1) * (
        polygamma(n - 1, mpf(m) / 2) - polygamma(n - 1, mpf(m + 1) / 2)
    )
    if n == 1:
        q = -sm * (ln2 ** 2 - 2 * g * ln2)
    else:
        zn = _euler_maclaurin(mpf(n), mpf(1), True)
        if printed:
            q = 2 * ln2 * sm * zn[0] + (2 ** n - 2) * zn[1]
        else:
            q = sm * (2 * ln2 * zn[0] + (2 ** n - 2) * zn[1])
    finite = sum((-1) ** k * log(k) / mpf(k) ** n for k in range(2, m))
    if printed and n == 1:
        finite = mpf(0)
    rhs = psi_part + q + 2 ** n * (-sm) * finite
    return +lhs, +rhs


@precise
def beta_deriv_zero_closed_form(printed: bool = False) -> tuple[mpf, mpf]:
    """``beta'(0)`` against ``ln(Gamma(1/4) / (2 Gamma(3/4)))``.

    ``printed=True`` doubles the right side, a form that is off by a factor 2.
    """
    from .beta import dirichlet_beta_deriv

    lhs = dirichlet_beta_deriv(0)
    rhs = -(log(2) + log_gamma(mpf(3) / 4) - log_gamma(mpf(1) / 4))
    if printed:
        rhs *= 2
    return +lhs, +rhs


@precise
def beta_deriv_zero_reflection() -> tuple[mpf, mpf]:
    """``beta'(0)`` against ``gamma/2 + ln(pi/2)/2 - (2/pi) beta'(1)``."""
    from .beta import dirichlet_beta_deriv

    lhs = dirichlet_beta_deriv(0)
    rhs = constant("euler_gamma") / 2 + log(pi / 2) / 2 - 2 / pi * dirichlet_beta_deriv(1)
    return +lhs, +rhs
