"""Polylogarithms on the unit circle, ``Li_n(e^(2 pi i t))``."""

from __future__ import annotations

from fractions import Fraction

from mpmath import mp, mpf, mpc, pi, log, exp, floor, expjpi

from ..context import precise, to_real, as_fraction
from ..errors import DomainError
from ..exactcomb import bernoulli_number, harmonic
from .hurwitz import _euler_maclaurin

__all__ = ["polylog_unit_circle", "polylog_unit_circle_rational"]


def _zeta_int(k: int) -> mpf:
    """Riemann zeta at an integer ``k != 1``; exact for ``k <= 0``."""
    if k <= 0:
        b = bernoulli_number(1 - k) / (1 - k)
        return mpf(-b.numerator) / b.denominator if k < 0 else mpf(-1) / 2
    return _euler_maclaurin(mpf(k), mpf(1), False)[0]


@precise
def polylog_unit_circle(order: int, t) -> mpc:
    """``Li_order(e^(2 pi i t))`` for ``order >= 1`` and ``t`` not an integer.

    For ``order >= 2`` the value comes from the expansion about ``mu = 0`` of
    ``Li_n(e^mu)``, with ``mu = 2 pi i t`` and ``t`` reduced to ``(-1/2, 1/2]``::

        Li_n(e^mu) = mu^(n-1)/(n-1)! [H_(n-1) - ln(-mu)]
                     + sum_{k >= 0, k != n-1} zeta(n-k) mu^k / k!

    which converges geometrically (ratio at most 1/2) for ``|mu| <= pi``.
    """
    if int(order) != order or order < 1:
        raise DomainError(f"order must be a positive integer, got {order}")
    order = int(order)
    t = to_real(t)
    r = t - floor(t + mpf(1) / 2)
    if r == 0:
        raise DomainError("polylog on the unit circle is singular at z = 1")
    if r == -mpf(1) / 2:
        r = mpf(1) / 2
    with mp.extradps(10):
        if order == 1:
            return +(-log(1 - expjpi(2 * r)))
        mu = mpc(0, 2 * pi * r)
        eps = mpf(10) ** (-(mp.dps + 2))
        Hq = harmonic(order - 1)
        H = mpf(Hq.numerator) / Hq.denominator
        total = mpc(0)
        term_pow = mpc(1)  # mu^k / k!
        k = 0
        small = 0
        while True:
            if k == order - 1:
                term = term_pow * (H - log(-mu))
            else:
                term = _zeta_int(order - k) * term_pow
            total += term
            if k > order and abs(term) < eps * max(1, abs(total)):
                small += 1
                # zeta vanishes at negative even integers, so wait for two quiet terms
                if small >= 2:
                    break
            else:
                small = 0
            k += 1
            term_pow = term_pow * mu / k
    return +total


@precise
def polylog_unit_circle_rational(order: int, t) -> mpc:
    """``Li_order(e^(2 pi i p/q))`` as ``q^-n sum_{r=1}^{q} e^(2 pi i r p/q) zeta(n, r/q)``.

    An independent route for rational ``t = p/q`` and ``order >= 2``.
    """
    tq = as_fraction(t) if not isinstance(t, str) else Fraction(t)
    if tq is None:
        raise DomainError("t must be rational")
    if order < 2:
        raise DomainError("this route needs order >= 2")
    p, q = tq.numerator, tq.denominator
    total = mpc(0)
    for r in range(1, q + 1):
        total += expjpi(mpf(2 * r * p) / q) * _euler_maclaurin(mpf(order), mpf(r) / q, False)[0]
    return +(total / mpf(q) ** order)
