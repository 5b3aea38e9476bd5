"""Reduction of ``Delta_n`` to ``Delta_(n-2)`` plus a double integral over the unit square.

The integrands contain ``[psi(w) - psi(w + 1/2)] / Gamma(2w)``, whose
digamma poles meet zeros of ``1/Gamma`` inside the square.  The ratio is
entire; :func:`psi_half_diff_over_gamma` evaluates it without touching a
pole.
"""

from __future__ import annotations

import math

from mpmath import mp, mpf, ceil, factorial

from ..context import precise
from ..errors import DomainError
from ..quadrature.de import QuadResult, integrate_2d_unit_square
from ..specfun import constant, gamma, polygamma, rgamma
from .malmsten import delta_general

__all__ = [
    "psi_half_diff_over_gamma",
    "delta_seq_reduction_2d",
    "delta_n_reduction_2d",
]


def psi_half_diff_over_gamma(v) -> mpf:
    """``[psi(v/2) - psi((v+1)/2)] / Gamma(v)``, an entire function of ``v``.

    Uses ``psi(v/2) - psi((v+1)/2) = -2 sum_{k>=0} (-1)^k / (k + v)``: the first
    ``K`` terms become ``(v)_k / Gamma(v+k+1)`` after dividing by ``Gamma(v)``,
    and the rest is a digamma difference at ``K + v > 0``.
    """
    v = mpf(v)
    K = max(0, int(ceil(-v)) + 1)
    s = mpf(0)
    rf = mpf(1)  # (v)_k
    for k in range(K):
        term = rf * rgamma(v + k + 1)
        s += -term if k % 2 else term
        rf *= v + k
    tail = -(polygamma(0, (K + v) / 2) - polygamma(0, (K + v + 1) / 2)) / 2
    s += (-1 if K % 2 else 1) * rgamma(v) * tail
    return -2 * s


def _bracket(u, k: int, psi_scale) -> mpf:
    """``Gamma((u+k)/2)/k! [sum_{j<k} 2^(j-1) (k-j-1)! / Gamma((u+k-2j)/2) + psi_scale/4 * g((u-k)/2)]``."""
    t = mpf(0)
    for j in range(k):
        t += mpf(2) ** (j - 1) * math.factorial(k - j - 1) * rgamma((u + k - 2 * j) / 2)
    t += psi_scale * psi_half_diff_over_gamma((u - k) / 2) / 4
    return gamma((u + k) / 2) / math.factorial(k) * t


def _square(f_of_u, tol) -> QuadResult:
    cache: dict = {}

    def f(a, b):
        u = a + b
        v = cache.get(u)
        if v is None:
            v = cache[u] = f_of_u(u)
        return v

    return integrate_2d_unit_square(f, tol)


def _work_dps(tol) -> int:
    return max(20, int(-mp.log10(tol)) + 12)


@precise
def delta_seq_reduction_2d(n: int, tol=mpf("1e-8")) -> QuadResult:
    """``delta_n`` as ``-2^n int int _bracket(a + b, n) da db`` over the unit square.

    Returns the :class:`QuadResult` of the double integral already scaled by
    ``-2^n`` (value and error estimate).
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    tol = mpf(tol)
    with mp.workdps(_work_dps(tol)):
        # the factor 2^n multiplies the j-sum's 2^(j-n-1) into 2^(j-1) and the psi term by 2^n
        res = _square(lambda u: _bracket(u, n, mpf(2) ** n), tol)
    return QuadResult(-res.value, res.error_estimate, res.evaluations, res.converged, res.levels)


@precise
def delta_n_reduction_2d(n: int, tol=mpf("1e-8"), printed: bool = False) -> mpf:
    """``Delta_n`` for ``n >= 4`` from ``Delta_(n-2)`` and a double integral.

    ::

        Delta_n = -4G/(pi (n-2)(n-1)) + (n-2)/(n-1) Delta_(n-2)
                  + 1/((n-2)(n-1)) sum_{k=1}^{n-3} int int _bracket(a+b, k) da db

    The digamma term inside the bracket carries a factor ``2^k``.
    ``printed=True`` drops that factor (a variant that is wrong for every
    ``n >= 4``) so the difference can be measured.

    Raises :class:`ConvergenceError` when the double integral does not meet ``tol``.
    """
    if n < 4:
        raise DomainError("the reduction needs n >= 4")
    tol = mpf(tol)
    with mp.workdps(_work_dps(tol)):

        def integrand(u):
            return sum(
                (_bracket(u, k, 1 if printed else mpf(2) ** k) for k in range(1, n - 2)),
                mpf(0),
            )

        res = _square(integrand, tol).require()
    G = constant("catalan")
    m = (n - 2) * (n - 1)
    v = -4 * G / (constant("pi") * m) + mpf(n - 2) / (n - 1) * delta_general(n - 2) + res.value / m
    return +v
