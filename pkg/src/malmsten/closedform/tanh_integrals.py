"""Closed forms for integrals of tanh, ln cosh and arctan against rational functions.

Throughout, ``a > 0`` scales the hyperbolic argument and only ``|y|`` enters.
"""

from __future__ import annotations

from mpmath import mpf, log, pi, sqrt

from ..context import precise, to_real
from ..errors import DomainError
from ..specfun import constant, log_gamma, polygamma

__all__ = [
    "kappa_family",
    "tanh_rational_general",
    "arctan_tanh_integrals",
    "gamma_representation",
    "gamma_from_representation",
    "sech2_log_integral",
    "ln2_from_integral",
    "pi_from_integral",
]

_HALF = mpf(1) / 2


def _y_nonzero(y, what):
    if y == 0:
        raise DomainError(f"{what} needs y != 0")


def _a_positive(a):
    if a <= 0:
        raise DomainError(f"a must be positive, got a={a}")


@precise
def kappa_family(which: str, y) -> mpf:
    """Values of three integrals with weight ``tanh(pi t/2)``.

    ``kappa``  = int tanh(pi t/2) (1/t - t/(t^2+y^2)) dt = psi((1+|y|)/2) - psi(1/2)
    ``kappa1`` = int t/(t^2+y^2) (1 - tanh(pi t/2)) dt    = psi((1+|y|)/2) + ln(2/|y|)
    ``kappa2`` = int (tanh(pi t/2)/t - t/(t^2+y^2)) dt    = gamma + ln(2|y|)

    all over ``(0, inf)``.
    """
    y = abs(to_real(y))
    if which == "kappa":
        return +(polygamma(0, (1 + y) / 2) - polygamma(0, _HALF))
    if which == "kappa1":
        _y_nonzero(y, which)
        return +(polygamma(0, (1 + y) / 2) + log(2 / y))
    if which == "kappa2":
        _y_nonzero(y, which)
        return +(constant("euler_gamma") + log(2 * y))
    raise DomainError(f"unknown member {which!r}")


@precise
def tanh_rational_general(which: str, a, y) -> mpf:
    """The ``kappa`` family with ``tanh(a t)`` in place of ``tanh(pi t/2)``.

    ``eq31``: int tanh(at)(1/t - t/(t^2+y^2)) dt = psi(1/2 + a|y|/pi) - psi(1/2)
    ``eq32``: int t/(t^2+y^2) (1 - tanh(at)) dt  = psi(1/2 + a|y|/pi) + ln(pi/(a|y|))
    ``eq34``: int (tanh(at)/t - t/(t^2+y^2)) dt  = gamma + ln(4a|y|/pi)
    """
    a, y = to_real(a), abs(to_real(y))
    _a_positive(a)
    z = _HALF + a * y / pi
    if which == "eq31":
        return +(polygamma(0, z) - polygamma(0, _HALF))
    if which == "eq32":
        _y_nonzero(y, which)
        return +(polygamma(0, z) + log(pi / (a * y)))
    if which == "eq34":
        _y_nonzero(y, which)
        return +(constant("euler_gamma") + log(4 * a * y / pi))
    raise DomainError(f"unknown member {which!r}")


def _lg_term(a, y):
    # ln( Gamma(1/2 + a|y|/pi) / sqrt(pi) )
    return log_gamma(_HALF + a * y / pi) - log(pi) / 2


@precise
def arctan_tanh_integrals(which: str, a, y) -> mpf:
    """``youpart``: int (1 - tanh(at)) arctan(|y|/t) dt = (pi/a) L + |y| (ln(pi/(a|y|)) + 1)

    ``younko``: int ln(e^(at) sech(at)) / (t^2 + y^2) dt = (pi/|y|) L + a (ln(pi/(a|y|)) + 1)

    with ``L = ln(Gamma(1/2 + a|y|/pi)/sqrt(pi))``.
    """
    a, y = to_real(a), abs(to_real(y))
    _a_positive(a)
    _y_nonzero(y, which)
    L = _lg_term(a, y)
    tail = log(pi / (a * y)) + 1
    if which == "youpart":
        return +(pi / a * L + y * tail)
    if which == "younko":
        return +(pi / y * L + a * tail)
    raise DomainError(f"unknown member {which!r}")


@precise
def gamma_representation(rep: int, a, y) -> mpf:
    """The value of the integral term in each of five representations of Euler's gamma.

    ========  ==================================================================  ==========================
    ``rep``   integral term over (0, inf)                                         its value
    ========  ==================================================================  ==========================
    1         ``tanh(at) (1/t - arctan(|y|/t)/|y|)``                               ``gamma + ln 4 + M``
    2         ``(y^2/a) ln cosh(at) / (t^2 (t^2+y^2))``                            ``gamma + ln 4 + M``
    3         ``ln cosh(at)/(a t^2) - t/(t^2+y^2)``                                ``gamma - 1 + ln(4a|y|/pi)``
    4         ``ln cosh(at)/(a t^2) - arctan(|y|/t)/|y|``                          ``gamma - 2 + ln(4a|y|/pi)``
    5         ``tanh(at)/t - arctan(|y|/t)/|y|``                                   ``gamma - 1 + ln(4a|y|/pi)``
    ========  ==================================================================  ==========================

    where ``M = (pi/(a|y|)) ln(Gamma(1/2 + a|y|/pi)/sqrt(pi))``.
    """
    a, y = to_real(a), abs(to_real(y))
    _a_positive(a)
    _y_nonzero(y, "gamma_representation")
    g = constant("euler_gamma")
    if rep in (1, 2):
        return +(g + log(4) + pi / (a * y) * _lg_term(a, y))
    lq = log(4 * a * y / pi)
    if rep in (3, 5):
        return +(g - 1 + lq)
    if rep == 4:
        return +(g - 2 + lq)
    raise DomainError(f"representation must be 1..5, got {rep}")


@precise
def gamma_from_representation(rep: int, a, y, integral) -> mpf:
    """Recover Euler's gamma from a numerical value of the integral term of ``rep``."""
    return +(to_real(integral) - (gamma_representation(rep, a, y) - constant("euler_gamma")))


@precise
def sech2_log_integral(a, y) -> mpf:
    """``int_0^inf ln(t^2 + y^2) sech^2(at) dt = (2/a)(psi(1/2 + a|y|/pi) + ln(pi/a))``."""
    a, y = to_real(a), abs(to_real(y))
    _a_positive(a)
    return +(2 / a * (polygamma(0, _HALF + a * y / pi) + log(pi / a)))


@precise
def ln2_from_integral(integral) -> mpf:
    """``ln 2 = 1 - int_0^inf ln(e^t sech t)/(t^2 + pi^2) dt``."""
    return +(1 - to_real(integral))


@precise
def pi_from_integral(integral) -> mpf:
    """``pi = int_0^inf (1 - tanh t) arctan(pi/t) dt / (1 - ln 2)``."""
    return +(to_real(integral) / (1 - constant("ln2")))
