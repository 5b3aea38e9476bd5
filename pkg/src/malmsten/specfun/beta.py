"""Dirichlet beta function ``beta(s) = sum_{k>=0} (-1)^k (2k+1)^-s`` and its derivative."""

from __future__ import annotations

from mpmath import mp, mpf, log, pi, cos, sech, inf

from ..context import precise, to_real
from ..errors import DomainError
from .accel import alternating_sum
from .hurwitz import _euler_maclaurin

__all__ = ["dirichlet_beta", "dirichlet_beta_deriv", "beta_via_integral"]

_QUARTER = mpf(1) / 4


def _near_one(s) -> bool:
    return abs(s - 1) < _QUARTER


@precise
def dirichlet_beta(s) -> mpf:
    """Dirichlet beta for any real ``s``.

    Uses ``4^-s [zeta(s, 1/4) - zeta(s, 3/4)]`` away from ``s = 1`` and the
    accelerated alternating series close to it.

    Examples
    --------
    >>> from malmsten.specfun import dirichlet_beta
    >>> float(dirichlet_beta(0))
    0.5
    """
    s = to_real(s)
    if _near_one(s):
        return +alternating_sum(lambda k: (2 * k + 1) ** (-s))
    q = mpf(1) / 4
    d = _euler_maclaurin(s, q, False)[0] - _euler_maclaurin(s, 3 * q, False)[0]
    return +(4 ** (-s) * d)


@precise
def dirichlet_beta_deriv(s) -> mpf:
    """``beta'(s)``, by the product rule on ``4^-s [zeta(s,1/4) - zeta(s,3/4)]``."""
    s = to_real(s)
    if _near_one(s):
        return +alternating_sum(lambda k: -log(2 * k + 1) * (2 * k + 1) ** (-s))
    q = mpf(1) / 4
    z1, d1 = _euler_maclaurin(s, q, True)
    z3, d3 = _euler_maclaurin(s, 3 * q, True)
    return +(4 ** (-s) * ((d1 - d3) - log(4) * (z1 - z3)))


@precise
def beta_via_integral(s, printed_exponent: bool = False) -> mpf:
    """``beta(s)`` for ``s < 0`` from the sech integral::

        beta(s) = 1/2 (2/pi)^(1-s) cos(pi s/2) int_0^inf x^-s sech x dx

    With ``printed_exponent=True`` the prefactor uses ``(2/pi)^(1/s)``
    instead; that variant is wrong and is kept only to measure by how much.
    """
    from ..quadrature.de import exp_sinh

    s = to_real(s)
    if s >= 0:
        raise DomainError(f"the sech integral route needs s < 0, got s={s}")
    cutoff = (mp.dps + 10) * log(10) - s * log(mp.dps + 10) + 10
    tol = mpf(10) ** (-(mp.dps - 5))
    integral = exp_sinh(lambda x: x ** (-s) * sech(x), tol, cutoff=cutoff).require().value
    expo = 1 / s if printed_exponent else 1 - s
    return +((2 / pi) ** expo * cos(pi * s / 2) * integral / 2)
