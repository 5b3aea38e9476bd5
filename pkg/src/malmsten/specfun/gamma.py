"""Gamma, log-gamma and polygamma functions for real arguments.

Each routine shifts the argument upward with the functional recurrence and
then sums the Stirling-type asymptotic series until the terms drop below the
working epsilon.
"""

from __future__ import annotations

import math
import threading

from mpmath import mp, mpf, log, pi, sin, exp, floor, factorial

from ..context import precise, to_real
from ..errors import DomainError, PoleError
from ..exactcomb import bernoulli_number

_bern_cache: dict[int, list[mpf]] = {}
_bern_lock = threading.Lock()


def bernoulli_even(j: int) -> mpf:
    """``B_{2j}`` as an mpf at the current binary precision (cached)."""
    table = _bern_cache.get(mp.prec)
    if table is None or len(table) <= j:
        with _bern_lock:
            table = _bern_cache.setdefault(mp.prec, [])
            for i in range(len(table), j + 16):
                b = bernoulli_number(2 * i)
                table.append(mpf(b.numerator) / b.denominator)
    return table[j]


def _shift_threshold(n: int = 0) -> int:
    # asymptotic terms B_2k/z^2k first reach 10^-dps when 2*pi*z ~ dps*ln 10
    return int(mp.dps * math.log(10) / (2 * math.pi)) + n + 8


@precise
def log_gamma(x) -> mpf:
    """``ln Gamma(x)`` for ``x > 0``."""
    x = to_real(x)
    if x <= 0:
        raise DomainError(f"log_gamma needs x > 0, got {x}")
    with mp.extradps(10):
        z0 = _shift_threshold()
        shift = max(0, int(z0 - floor(x)) + 1)
        prod = mpf(1)
        for k in range(shift):
            prod *= x + k
        z = x + shift
        eps = mpf(2) ** (-mp.prec)
        s = (z - mpf(1) / 2) * log(z) - z + log(2 * pi) / 2
        zinv2 = 1 / (z * z)
        zpow = 1 / z
        k = 1
        while True:
            term = bernoulli_even(k) / (2 * k * (2 * k - 1)) * zpow
            s += term
            if abs(term) < eps * abs(s) or k > 4 * mp.dps:
                break
            zpow *= zinv2
            k += 1
        result = s - log(prod)
    return +result


@precise
def gamma(x) -> mpf:
    """``Gamma(x)`` for real ``x`` that is not a nonpositive integer."""
    x = to_real(x)
    if x > 0:
        return +exp(log_gamma(x))
    if x == floor(x):
        raise PoleError(f"Gamma has a pole at {x}")
    # reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    with mp.extradps(10):
        r = pi / (sin(pi * x) * exp(log_gamma(1 - x)))
    return +r


@precise
def rgamma(x) -> mpf:
    """``1/Gamma(x)``, entire; zero at the nonpositive integers."""
    x = to_real(x)
    if x > 0:
        return +exp(-log_gamma(x))
    if x == floor(x):
        return mpf(0)
    with mp.extradps(10):
        r = sin(pi * x) * exp(log_gamma(1 - x)) / pi
    return +r


@precise
def polygamma(n: int, x) -> mpf:
    """``psi_n(x) = d^(n+1)/dx^(n+1) ln Gamma(x)`` for ``0 <= n <= 8`` and ``x > 0``."""
    if not 0 <= n <= 8:
        raise DomainError(f"polygamma order must be in 0..8, got {n}")
    x = to_real(x)
    if x <= 0:
        if x == floor(x):
            raise PoleError(f"psi_{n} has a pole at {x}")
        raise DomainError(f"polygamma needs x > 0, got {x}")
    with mp.extradps(10):
        z0 = _shift_threshold(n)
        shift = max(0, int(z0 - floor(x)) + 1)
        z = x + shift
        eps = mpf(2) ** (-mp.prec)
        if n == 0:
            s = log(z) - 1 / (2 * z)
            zinv2 = 1 / (z * z)
            zpow = zinv2
            k = 1
            while True:
                term = bernoulli_even(k) / (2 * k) * zpow
                s -= term
                if abs(term) < eps * abs(s) or k > 4 * mp.dps:
                    break
                zpow *= zinv2
                k += 1
            # psi(x) = psi(x + N) - sum_{k<N} 1/(x+k)
            s -= sum(1 / (x + k) for k in range(shift))
        else:
            nf = factorial(n)
            s = factorial(n - 1) / z**n + nf / (2 * z ** (n + 1))
            zinv2 = 1 / (z * z)
            zpow = 1 / z ** (n + 2)
            # (2k+n-1)!/(2k)! computed incrementally
            ratio = factorial(n + 1) / 2
            k = 1
            while True:
                term = bernoulli_even(k) * ratio * zpow
                s += term
                if abs(term) < eps * abs(s) or k > 4 * mp.dps:
                    break
                ratio *= (2 * k + n) * (2 * k + n + 1) / mpf((2 * k + 1) * (2 * k + 2))
                zpow *= zinv2
                k += 1
            sign = 1 if n % 2 else -1
            s *= sign
            # psi_n(x) = psi_n(x + N) - (-1)^n n! sum_{k<N} (x+k)^-(n+1)
            tail = sum((x + k) ** (-(n + 1)) for k in range(shift))
            s -= (-1) ** n * nf * tail
    return +s


@precise
def digamma(x) -> mpf:
    return polygamma(0, x)
