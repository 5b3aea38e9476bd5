"""Closed forms for Malmsten-type integrals ``Delta_n(a, b) = int_0^inf ln(ax) sech^n(bx) dx``."""

from __future__ import annotations

from fractions import Fraction

from mpmath import mp, mpf, log, pi, sqrt, factorial

from ..context import precise, to_real
from ..errors import DomainError
from ..specfun import (
    constant,
    dirichlet_beta_deriv,
    gamma,
    log_gamma,
    zeta_sderiv_diff_limit_s1,
)
from ._terms import sgsp_weight, to_mpf, zeta_diff, zeta_sderiv_diff

__all__ = [
    "sech_power_integral",
    "delta_general",
    "delta_table",
    "delta_table_printed",
    "delta1_beta_chain",
    "delta_recurrence",
    "malmsten_log_quadratic",
    "zeta_limit_quarter",
    "scaling_coefficient",
]


def _check_ab(a, b):
    if a <= 0 or b <= 0:
        raise DomainError(f"a and b must be positive, got a={a}, b={b}")


@precise
def sech_power_integral(n: int) -> mpf:
    """``int_0^inf sech^n x dx = 2^(n-2) Gamma(n/2)^2 / (n-1)!``."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return +(mpf(2) ** (n - 2) * gamma(mpf(n) / 2) ** 2 / factorial(n - 1))


scaling_coefficient = sech_power_integral


@precise
def delta_general(n: int, a=1, b=1) -> mpf:
    """``Delta_n(a, b)`` for any ``n >= 1`` as a finite sum of Hurwitz zeta differences.

    ::

        Delta_n(a,b) = C_n ln(a/b)/b + 2^(2n-1)/(b (n-1)!) sum_{k=2}^{n+1} (-1/2)^k P_(k-2)(n-1, n/2)
                       [zeta'(k-n, n/4) - zeta'(k-n, (n+2)/4)
                        - (gamma + ln 4)(zeta(k-n, n/4) - zeta(k-n, (n+2)/4))]

    with ``C_n = sech_power_integral(n)``.  The term with ``k = n + 1`` has
    order 1 and is evaluated through the ``s -> 1`` limits.

    Examples
    --------
    >>> from malmsten.closedform import delta_general
    >>> round(float(delta_general(1)), 10)
    -0.5208856126
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    a, b = to_real(a), to_real(b)
    _check_ab(a, b)
    x = Fraction(n, 4)
    c = constant("euler_gamma") + log(4)
    s = mpf(0)
    for k in range(2, n + 2):
        w = sgsp_weight(k - 2, n - 1, Fraction(n, 2)) / 4  # (-1/2)^k P_(k-2)(n-1, n/2)
        if w == 0:
            continue  # odd-index coefficients vanish at x = m/2 + 1/2
        s += to_mpf(w) * (zeta_sderiv_diff(k - n, x) - c * zeta_diff(k - n, x))
    lead = sech_power_integral(n) * log(a / b) / b
    return +(lead + mpf(2) ** (2 * n - 1) / (b * factorial(n - 1)) * s)


def _l1(a, b):
    # ln( sqrt(2 a pi) Gamma(3/4) / (sqrt(b) Gamma(1/4)) )
    return log(2 * a * pi / b) / 2 + log_gamma(mpf(3) / 4) - log_gamma(mpf(1) / 4)


@precise
def delta_table(n: int, a=1, b=1) -> mpf:
    """``Delta_n(a, b)`` for ``n = 1..6`` from the explicit constant expressions.

    ``n = 2`` uses ``-gamma/b + ln(a pi/(4b))/b``; see
    :func:`delta_table_printed` for the transposed variant.
    """
    a, b = to_real(a), to_real(b)
    _check_ab(a, b)
    g = constant("euler_gamma")
    G = constant("catalan")
    z3, z5 = constant("zeta3"), constant("zeta5")
    p3 = constant("psi3_quarter")
    L = _l1(a, b)
    lq = log(a * pi / (4 * b))
    if n == 1:
        v = pi * L
    elif n == 2:
        v = -g + lq
    elif n == 3:
        v = -2 * G / pi + pi / 2 * L
    elif n == 4:
        v = -2 * g / 3 - 7 * z3 / (3 * pi ** 2) + 2 * lq / 3
    elif n == 5:
        v = -5 * G / (3 * pi) + pi / 24 - p3 / (192 * pi ** 3) + 3 * pi / 8 * L
    elif n == 6:
        v = -8 * g / 15 + 8 * lq / 15 - 7 * z3 / (3 * pi ** 2) - 31 * z5 / (5 * pi ** 4)
    else:
        raise DomainError(f"the explicit table covers n = 1..6, got n={n}")
    return +(v / b)


@precise
def delta_table_printed(n: int, a=1, b=1) -> mpf:
    """As :func:`delta_table`, but ``n = 2`` uses ``-gamma/a + ln(b pi/(4a))/a``.

    That form swaps ``a`` and ``b``.  It agrees with the integral only when
    ``a = b``; it is kept so the mismatch can be measured.
    """
    if n != 2:
        return delta_table(n, a, b)
    a, b = to_real(a), to_real(b)
    _check_ab(a, b)
    return +((-constant("euler_gamma") + log(b * pi / (4 * a))) / a)


@precise
def delta1_beta_chain(a=1, b=1) -> mpf:
    """``Delta_1(a, b) = (pi/(2b))(ln(a/b) - gamma) + (2/b) beta'(1)``."""
    a, b = to_real(a), to_real(b)
    _check_ab(a, b)
    return +(pi / (2 * b) * (log(a / b) - constant("euler_gamma")) + 2 / b * dirichlet_beta_deriv(1))


@precise
def delta_recurrence(n: int) -> tuple[mpf, mpf]:
    """``Delta_n`` from ``Delta_(n-2)`` along two recurrences, ``n >= 3``.

    Returns ``(via_lambda, via_chi)`` where::

        via_lambda = (n-2)/(n-1) Delta_(n-2) - lambda_(n-2)/(n-1)
        via_chi    = (n-2)/(n-1) Delta_(n-2) - (chi_(n-2) + lambda_1)/((n-2)(n-1))
    """
    from .sequences import chi_closed, lambda_closed

    if n < 3:
        raise DomainError("the recurrences need n >= 3")
    prev = delta_general(n - 2)
    base = mpf(n - 2) / (n - 1) * prev
    via_lambda = base - lambda_closed(n - 2) / (n - 1)
    via_chi = base - (chi_closed(n - 2) + lambda_closed(1)) / ((n - 2) * (n - 1))
    return +via_lambda, +via_chi


@precise
def malmsten_log_quadratic(a, b) -> mpf:
    """``int_0^inf ln(x^2 + a^2) sech(bx) dx`` for real ``a`` and ``b > 0``.

    Equal to ``(2 pi/b) ln( sqrt(2 pi/b) Gamma(b|a|/(2 pi) + 3/4) / Gamma(b|a|/(2 pi) + 1/4) )``.
    """
    a, b = to_real(a), to_real(b)
    if b <= 0:
        raise DomainError(f"b must be positive, got b={b}")
    t = b * abs(a) / (2 * pi)
    return +(2 * pi / b * (log(2 * pi / b) / 2 + log_gamma(t + mpf(3) / 4) - log_gamma(t + mpf(1) / 4)))


@precise
def zeta_limit_quarter() -> tuple[mpf, mpf]:
    """``lim_{s->1} [zeta'(s,1/4) - zeta'(s,3/4)]`` against ``2 Delta_1 + pi (gamma + ln 4)``.

    Returns ``(limit, closed_form)``; both are about 5.12678.
    """
    lhs = zeta_sderiv_diff_limit_s1(mpf(1) / 4)
    rhs = 2 * pi * _l1(mpf(1), mpf(1)) + pi * (constant("euler_gamma") + log(4))
    return +lhs, +rhs
