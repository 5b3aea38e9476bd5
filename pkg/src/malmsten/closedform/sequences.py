"""Closed forms for the integral sequences

::

    lambda_n = int_0^inf tanh(x) sech^n(x) / x dx
    delta_n  = int_0^inf (1 - sech x) sech^n(x) / x^2 dx
    chi_n    = int_0^inf (sech x - sech^n x) / x^2 dx

and the finite Stirling-polynomial/Hurwitz identities behind them.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from mpmath import mp, mpf, log, pi, factorial

from ..context import precise
from ..errors import DomainError
from ..exactcomb import sgsp_eval
from ..specfun import constant, gamma
from ._terms import (
    four_g_over_pi,
    sgsp_weight,
    to_mpf,
    zeta_diff,
    zeta_diff_no_zeta,
    zeta_sderiv_diff,
)

__all__ = [
    "chi_closed",
    "chi_parity",
    "lambda_closed",
    "lambda_parity",
    "delta_seq_closed",
    "delta_seq_direct",
    "chi_table",
    "lambda_table",
    "delta_seq_table",
    "cojer_identity",
    "stirling_zeta_combination",
    "hurwitz_sgsp_general",
    "chi_family_nested_sum",
]


def _check_n(n: int, low: int = 1):
    if int(n) != n or n < low:
        raise DomainError(f"n must be an integer >= {low}, got {n}")


def _weighted_sderiv_sum(m: int, x: Fraction, order0: int, arg: Fraction) -> mpf:
    """``sum_{k=0}^{m} (-1/2)^k P_k(m, x) [zeta'(k+order0, arg) - zeta'(k+order0, arg+1/2)]``."""
    s = mpf(0)
    for k in range(m + 1):
        w = sgsp_weight(k, m, x)
        if w:
            s += to_mpf(w) * zeta_sderiv_diff(k + order0, arg)
    return s


@precise
def chi_closed(n: int) -> mpf:
    """``chi_n`` from its two-sum Stirling/Hurwitz expression.

    ::

        chi_n = -4G/pi
                + 2^(2n-3) n^2/(n-1)! sum_{k=0}^{n-1} (-1/2)^k P_k(n-1, n/2) D'(k-n+2, n/4)
                - 2^(2n+1)/(n-1)!     sum_{k=0}^{n+1} (-1/2)^k P_k(n+1, (n+2)/2) D'(k-n, (n+2)/4)

    where ``D'(s, x) = zeta'(s, x) - zeta'(s, x + 1/2)``.
    """
    _check_n(n)
    s1 = _weighted_sderiv_sum(n - 1, Fraction(n, 2), 2 - n, Fraction(n, 4))
    s2 = _weighted_sderiv_sum(n + 1, Fraction(n + 2, 2), -n, Fraction(n + 2, 4))
    f = factorial(n - 1)
    v = -four_g_over_pi() + mpf(2) ** (2 * n - 3) * n * n / f * s1 - mpf(2) ** (2 * n + 1) / f * s2
    return +v


@lru_cache(maxsize=None)
def _chi_cached(n: int, prec: int) -> mpf:
    return chi_closed(n)


def _chi(n: int) -> mpf:
    return _chi_cached(n, mp.prec)


@precise
def lambda_closed(n: int) -> mpf:
    """``lambda_n = (chi_n + 4G/pi) / n``."""
    _check_n(n)
    return +((_chi(n) + four_g_over_pi()) / n)


@precise
def delta_seq_closed(n: int) -> mpf:
    """``delta_n = (n+1) lambda_(n+1) - n lambda_n = chi_(n+1) - chi_n``."""
    _check_n(n)
    return +(_chi(n + 1) - _chi(n))


def _even_parts(N: int):
    """Shared pieces of the even-index displays (``n = 2N``)."""
    s = mpf(0)
    for k in range(1, N + 1):
        c = N * N * sgsp_eval(2 * k - 2, 2 * N - 1, Fraction(N)) + sgsp_eval(2 * k, 2 * N + 1, Fraction(N + 1))
        if c:
            s += to_mpf(c / Fraction(4) ** k) * zeta_sderiv_diff(-2 * N + 2 * k, Fraction(N, 2))
    s2 = sum((sgsp_eval(2 * k, 2 * N + 1, Fraction(N + 1)) / Fraction(N) ** (2 * k) for k in range(1, N + 1)), Fraction(0))
    tail = zeta_sderiv_diff(-2 * N, Fraction(N + 1, 2))
    return s, to_mpf(s2), tail


def _odd_parts(N: int):
    """Shared pieces of the odd-index displays (``n = 2N + 1``)."""
    s = mpf(0)
    for k in range(N + 1):
        c = sgsp_eval(2 * k, 2 * N, Fraction(2 * N + 1, 2)) / Fraction(4) ** k
        if c:
            s += to_mpf(c) * zeta_sderiv_diff(-2 * N + 2 * k + 1, Fraction(2 * N + 1, 4))
    s2 = mpf(0)
    for k in range(N + 2):
        c = sgsp_eval(2 * k, 2 * N + 2, Fraction(2 * N + 3, 2)) / Fraction(4) ** k
        if c:
            s2 += to_mpf(c) * zeta_sderiv_diff(-2 * N + 2 * k - 1, Fraction(2 * N + 3, 4))
    return s, s2


@precise
def chi_parity(n: int, printed: bool = False) -> mpf:
    """``chi_n`` from the separate even-index and odd-index displays.

    For even ``n = 2N``::

        chi_2N = -4G/pi + 2^(4N+1)/(2N-1)! sum_{k=1}^{N} 4^-k (N^2 P_(2k-2)(2N-1, N) + P_2k(2N+1, N+1))
                                             D'(2k-2N, N/2)
                 + 2^(4N+1) N^(2N) ln(N/2) / (4^N (2N-1)!) sum_{k=1}^{N} N^(-2k) P_2k(2N+1, N+1)
                 - 2^(4N+1)/(2N-1)! D'(-2N, (N+1)/2)

    ``printed=True`` flips the sign of the first sum, which only matters
    from ``n = 4`` on.  The odd-index display is the same either way.
    """
    _check_n(n)
    G4 = four_g_over_pi()
    if n % 2 == 0:
        N = n // 2
        s, s2, tail = _even_parts(N)
        c = mpf(2) ** (4 * N + 1) / factorial(2 * N - 1)
        sign = -1 if printed else 1
        v = -G4 + sign * c * s + c * mpf(N) ** (2 * N) * log(mpf(N) / 2) / mpf(4) ** N * s2 - c * tail
    else:
        N = (n - 1) // 2
        s, s2 = _odd_parts(N)
        f = factorial(2 * N)
        v = -G4 + mpf(2) ** (4 * N - 1) * (2 * N + 1) ** 2 / f * s - mpf(2) ** (4 * N + 3) / f * s2
    return +v


@precise
def lambda_parity(n: int, printed: bool = False) -> mpf:
    """``lambda_n`` from the separate even-index and odd-index displays.

    The even display is ``(chi_2N + 4G/pi)/(2N)`` written out; ``printed=True``
    flips the sign of its first sum as in :func:`chi_parity`.
    """
    _check_n(n)
    if n % 2 == 0:
        N = n // 2
        s, s2, tail = _even_parts(N)
        c = mpf(2) ** (4 * N) / (N * factorial(2 * N - 1))
        sign = -1 if printed else 1
        v = (
            sign * c * s
            + mpf(2) ** (2 * N) * mpf(N) ** (2 * N - 1) * log(mpf(N) / 2) / factorial(2 * N - 1) * s2
            - c * tail
        )
    else:
        N = (n - 1) // 2
        s, s2 = _odd_parts(N)
        v = mpf(2) ** (4 * N - 1) * (2 * N + 1) / factorial(2 * N) * s - mpf(2) ** (4 * N + 3) / factorial(2 * N + 1) * s2
    return +v


@precise
def delta_seq_direct(n: int) -> mpf:
    """``delta_n`` from its four-sum Stirling/Hurwitz expression (no recurrence)."""
    _check_n(n)
    t1 = _weighted_sderiv_sum(n, Fraction(n + 1, 2), 1 - n, Fraction(n + 1, 4))
    t2 = _weighted_sderiv_sum(n + 2, Fraction(n + 3, 2), -n - 1, Fraction(n + 3, 4))
    t3 = _weighted_sderiv_sum(n - 1, Fraction(n, 2), 2 - n, Fraction(n, 4))
    t4 = _weighted_sderiv_sum(n + 1, Fraction(n + 2, 2), -n, Fraction(n + 2, 4))
    fn, fn1 = factorial(n), factorial(n - 1)
    v = (
        mpf(2) ** (2 * n - 1) * (n + 1) ** 2 / fn * t1
        - mpf(2) ** (2 * n + 3) / fn * t2
        - mpf(2) ** (2 * n - 3) * n * n / fn1 * t3
        + mpf(2) ** (2 * n + 1) / fn1 * t4
    )
    return +v


def _table_constants():
    return (
        constant("catalan"),
        constant("pi"),
        constant("zeta3"),
        constant("zeta5"),
        constant("zeta7"),
        constant("psi3_quarter"),
        constant("psi5_quarter"),
        constant("psi7_quarter"),
    )


@precise
def chi_table(n: int) -> mpf:
    """``chi_n`` for ``n = 1..6`` in terms of G, zeta(3,5,7) and psi_k(1/4)."""
    G, p, z3, z5, z7, q3, q5, q7 = _table_constants()
    table = {
        1: lambda: mpf(0),
        2: lambda: -4 * G / p + 14 * z3 / p**2,
        3: lambda: -2 * G / p - p / 2 + q3 / (16 * p**3),
        4: lambda: -4 * G / p + 28 * z3 / (3 * p**2) + 124 * z5 / p**4,
        5: lambda: -5 * G / (2 * p) - 3 * p / 4 + 5 * q3 / (96 * p**3) + q5 / (768 * p**5),
        6: lambda: -4 * G / p + 112 * z3 / (15 * p**2) + 124 * z5 / p**4 + 762 * z7 / p**6,
    }
    if n not in table:
        raise DomainError(f"the explicit table covers n = 1..6, got n={n}")
    return +table[n]()


@precise
def delta_seq_table(n: int) -> mpf:
    """``delta_n`` for ``n = 1..6`` in terms of G, zeta(3,5,7) and psi_k(1/4)."""
    G, p, z3, z5, z7, q3, q5, q7 = _table_constants()
    table = {
        1: lambda: -4 * G / p + 14 * z3 / p**2,
        2: lambda: -14 * z3 / p**2 + 2 * G / p - p / 2 + q3 / (16 * p**3),
        3: lambda: -2 * G / p + 28 * z3 / (3 * p**2) + 124 * z5 / p**4 + p / 2 - q3 / (16 * p**3),
        4: lambda: 3 * G / (2 * p) - 28 * z3 / (3 * p**2) - 124 * z5 / p**4 - 3 * p / 4
        + 5 * q3 / (96 * p**3) + q5 / (768 * p**5),
        5: lambda: -3 * G / (2 * p) + 112 * z3 / (15 * p**2) + 124 * z5 / p**4 + 762 * z7 / p**6
        + 3 * p / 4 - 5 * q3 / (96 * p**3) - q5 / (768 * p**5),
        6: lambda: 5 * G / (4 * p) - 15 * p / 16 - 112 * z3 / (15 * p**2) - 124 * z5 / p**4
        - 762 * z7 / p**6 + 259 * q3 / (5760 * p**3) + 7 * q5 / (4608 * p**5) + q7 / (92160 * p**7),
    }
    if n not in table:
        raise DomainError(f"the explicit table covers n = 1..6, got n={n}")
    return +table[n]()


@precise
def lambda_table(n: int) -> mpf:
    """``lambda_n`` for ``n = 1..6`` in terms of G, zeta(3,5,7) and psi_k(1/4)."""
    G, p, z3, z5, z7, q3, q5, q7 = _table_constants()
    table = {
        1: lambda: 4 * G / p,
        2: lambda: 7 * z3 / p**2,
        3: lambda: 2 * G / (3 * p) - p / 6 + q3 / (48 * p**3),
        4: lambda: 7 * z3 / (3 * p**2) + 31 * z5 / p**4,
        5: lambda: 3 * G / (10 * p) - 3 * p / 20 + q3 / (96 * p**3) + q5 / (3840 * p**5),
        6: lambda: 56 * z3 / (45 * p**2) + 62 * z5 / (3 * p**4) + 127 * z7 / p**6,
    }
    if n not in table:
        raise DomainError(f"the explicit table covers n = 1..6, got n={n}")
    return +table[n]()


def _cojer_sum(n: int) -> mpf:
    s = mpf(0)
    x, arg = Fraction(n, 2), Fraction(n, 4)
    for k in range(n):
        w = sgsp_weight(k, n - 1, x)
        if w:
            d = zeta_diff_no_zeta(k - n + 2, arg)
            s += to_mpf(w * d) if isinstance(d, Fraction) else to_mpf(w) * d
    return s


@precise
def cojer_identity(n: int) -> tuple[mpf, mpf]:
    """``sum_{k<n} (-1/2)^k P_k(n-1, n/2) [zeta(k-n+2, n/4) - zeta(k-n+2, (n+2)/4)]`` against ``2^(1-n) Gamma(n/2)^2``.

    The zeta differences are taken from Bernoulli polynomials (orders <= 0)
    and polygamma differences (orders >= 1), never from a zeta evaluation.
    """
    _check_n(n)
    rhs = mpf(2) ** (1 - n) * gamma(mpf(n) / 2) ** 2
    return +_cojer_sum(n), +rhs


@precise
def stirling_zeta_combination(n: int) -> mpf:
    """``2^(2n+1)/(n-1)! [n^2/16 S_n - S_(n+2)]`` with ``S_n`` the sum in :func:`cojer_identity`.

    Vanishes because ``S_n = 2^(1-n) Gamma(n/2)^2`` and
    ``Gamma(n/2 + 1) = (n/2) Gamma(n/2)``.
    """
    _check_n(n)
    v = mpf(2) ** (2 * n + 1) / factorial(n - 1) * (mpf(n * n) / 16 * _cojer_sum(n) - _cojer_sum(n + 2))
    return +v


@precise
def hurwitz_sgsp_general(m: int, n: int, p: int) -> tuple[mpf, mpf]:
    """Two-term Stirling-polynomial/Hurwitz identity with rhs ``2^(1-m) Gamma(p/n) Gamma((nm+n-p)/n)``.

    ::

        sum_{k=1}^{m+1} (-1/2)^(k-1) [ P_(k-1)(m, p/n)       D(k-m, p/(2n))
                                     + P_(k-1)(m, (nm+n-p)/n) D(k-m, (nm+n-p)/(2n)) ]

    with ``D(s, x) = zeta(s, x) - zeta(s, x + 1/2)``.
    """
    if m < 1 or n < 1 or p < 1:
        raise DomainError("m, n, p must be positive")
    x1 = Fraction(p, n)
    x2 = Fraction(n * m + n - p, n)
    if x2 <= 0 and x2.denominator == 1:
        raise DomainError("(nm+n-p)/n must not be a nonpositive integer")
    if x2 <= 0:
        raise DomainError("needs p < n(m+1) so both Hurwitz parameters are positive")
    lhs = mpf(0)
    for k in range(1, m + 2):
        for x in (x1, x2):
            w = sgsp_weight(k - 1, m, x)
            if w:
                lhs += to_mpf(w) * zeta_diff(k - m, x / 2)
    rhs = mpf(2) ** (1 - m) * gamma(to_mpf(x1)) * gamma(to_mpf(x2))
    return +lhs, +rhs


@precise
def chi_family_nested_sum(lower: Sequence[int], top: int) -> mpf:
    """Nested sum ``sum_{k_d=l_d}^{top} ... sum_{k_2=l_2}^{k_3} sum_{k_1=l_1}^{k_2} chi_(k_1)``.

    ``lower`` lists ``l_1, ..., l_d``; with ``d = 1`` this is a plain sum of
    ``chi_k`` for ``k = l_1..top``.
    """
    lower = list(lower)
    if not lower:
        raise DomainError("the index chain must not be empty")
    if any(l < 1 for l in lower):
        raise DomainError("lower bounds must be >= 1")

    @lru_cache(maxsize=None)
    def level(depth: int, upper: int) -> mpf:
        lo = lower[depth]
        if depth == 0:
            return sum((_chi(k) for k in range(lo, upper + 1)), mpf(0))
        return sum((level(depth - 1, k) for k in range(lo, upper + 1)), mpf(0))

    return +level(len(lower) - 1, top)
