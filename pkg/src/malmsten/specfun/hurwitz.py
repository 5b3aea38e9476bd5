"""Hurwitz zeta function, its s-derivative and the alternating Lerch series.

The production route is Euler-Maclaurin summation.  For ``zeta(s, a)`` with
``N`` direct terms and ``M`` tail terms, writing ``X = N + a``::

    zeta(s, a) = sum_{k<N} (k+a)^-s + X^(1-s)/(s-1) + X^-s/2
                 + sum_{j=1}^{M} B_2j/(2j)! (s)_(2j-1) X^(1-s-2j)

and the s-derivative is taken term by term, so each tail term picks up the
factor ``d/ds (s)_(2j-1) - (s)_(2j-1) ln X``.  Near ``s = 1`` the pole
cancels in every combination used downstream; those combinations go
through the alternating series ``Phi(-1, s, a)`` instead.
"""

from __future__ import annotations

import math

from mpmath import mp, mpf, log, pi, sin, atan, expm1, inf

from ..context import precise, to_real
from ..errors import DomainError, PoleError
from .accel import alternating_sum
from .gamma import bernoulli_even, polygamma

__all__ = [
    "hurwitz_zeta",
    "hurwitz_zeta_sderiv",
    "hurwitz_zeta_hermite",
    "zeta_half_diff",
    "zeta_sderiv_half_diff",
    "lerch_phi_neg1",
    "lerch_phi_neg1_sderiv",
    "zeta_sderiv_diff_limit_s1",
]


def _check(s, a):
    if a <= 0:
        raise DomainError(f"Hurwitz zeta needs a > 0, got a={a}")
    if s == 1:
        raise PoleError("Hurwitz zeta has a pole at s = 1")


def _euler_maclaurin(s: mpf, a: mpf, want_deriv: bool) -> tuple[mpf, mpf | None]:
    dps = mp.dps
    # X = N + a must satisfy 2*pi*X >~ dps*ln 10 + |s| for the tail to reach eps
    x_min = dps * math.log(10) / (2 * math.pi) + abs(float(s)) / 2 + 5
    N = max(0, math.ceil(x_min - float(a)))
    X = N + a
    extra = 10
    if s < 1:
        # the direct sum and tail grow like X^(1-s) while the result may not
        extra += math.ceil((1 - float(s)) * math.log10(float(X) + 1))
    with mp.extradps(extra):
        eps = mpf(10) ** (-(dps + 5))
        S = mpf(0)
        dS = mpf(0)
        for k in range(N):
            t = (k + a) ** (-s)
            S += t
            if want_deriv:
                dS -= log(k + a) * t
        L = log(X)
        Xs = X ** (-s)
        X1s = X * Xs
        S += X1s / (s - 1) + Xs / 2
        if want_deriv:
            dS += -X1s * (L / (s - 1) + 1 / (s - 1) ** 2) - L * Xs / 2
        scale = max(abs(S), abs(dS), mpf(1))
        # p = (s)_(2j-1), dp = its s-derivative
        p, dp = s, mpf(1)
        X2 = X * X
        Xpow = Xs * X  # X^(1-s); becomes X^(1-s-2j) inside the loop
        fact = mpf(2)  # (2j)!
        jmax = int(math.pi * float(X)) + 2
        for j in range(1, jmax + 1):
            Xpow /= X2
            c = bernoulli_even(j) / fact
            t = c * p * Xpow
            S += t
            dt = mpf(0)
            if want_deriv:
                dt = c * (dp - p * L) * Xpow
                dS += dt
            if abs(t) < eps * scale and abs(dt) < eps * scale and j > 1:
                break
            # advance to (s)_(2j+1) = (s)_(2j-1) (s+2j-1)(s+2j)
            u, v = s + 2 * j - 1, s + 2 * j
            dp = dp * u * v + p * (u + v)
            p = p * u * v
            fact *= (2 * j + 1) * (2 * j + 2)
        else:
            raise DomainError(f"Euler-Maclaurin tail did not settle at s={s}, a={a}")
    return +S, (+dS if want_deriv else None)


@precise
def hurwitz_zeta(s, a) -> mpf:
    """Hurwitz zeta ``zeta(s, a) = sum_{k>=0} (k+a)^-s`` continued to real ``s != 1``.

    Parameters
    ----------
    s : real
        Any real order except the pole ``s = 1``.
    a : real
        Shift, ``a > 0``.

    Examples
    --------
    >>> from malmsten.specfun import hurwitz_zeta
    >>> float(hurwitz_zeta(-1, 1))
    -0.08333333333333333
    """
    s, a = to_real(s), to_real(a)
    _check(s, a)
    return _euler_maclaurin(s, a, False)[0]


@precise
def hurwitz_zeta_sderiv(s, a) -> mpf:
    """``d/ds zeta(s, a)`` for real ``s != 1`` and ``a > 0``."""
    s, a = to_real(s), to_real(a)
    _check(s, a)
    return _euler_maclaurin(s, a, True)[1]


@precise
def hurwitz_zeta_hermite(s, a) -> mpf:
    """``zeta(s, a)`` from Hermite's integral representation, by quadrature.

    An independent route to :func:`hurwitz_zeta`, used for cross-checks::

        zeta(s,a) = a^-s/2 + a^(1-s)/(s-1)
                    + 2 int_0^inf sin(s atan(x/a)) / ((x^2+a^2)^(s/2) (e^(2 pi x) - 1)) dx
    """
    from ..quadrature.de import exp_sinh

    s, a = to_real(s), to_real(a)
    _check(s, a)

    def f(x):
        return sin(s * atan(x / a)) / ((x * x + a * a) ** (s / 2) * expm1(2 * pi * x))

    tol = mpf(10) ** (-(mp.dps - 5))
    res = exp_sinh(f, tol)
    return +(a ** (-s) / 2 + a ** (1 - s) / (s - 1) + 2 * res.value)


@precise
def lerch_phi_neg1(s, a, method: str = "auto") -> mpf:
    """``Phi(-1, s, a) = sum_{n>=0} (-1)^n (n+a)^-s``, entire in ``s``.

    ``method="zeta"`` uses ``2^-s [zeta(s, a/2) - zeta(s, (a+1)/2)]``;
    ``method="series"`` sums the alternating series with acceleration.
    The default picks the series within 1/4 of ``s = 1``.
    """
    s, a = to_real(s), to_real(a)
    if a <= 0:
        raise DomainError(f"Phi(-1, s, a) needs a > 0, got a={a}")
    if method == "auto":
        method = "series" if abs(s - 1) < mpf(1) / 4 else "zeta"
    if method == "series":
        return +alternating_sum(lambda k: (k + a) ** (-s))
    if method != "zeta":
        raise DomainError(f"unknown method {method!r}")
    if s == 1:
        raise PoleError("the zeta route is singular at s = 1; use method='series'")
    h = _euler_maclaurin(s, a / 2, False)[0] - _euler_maclaurin(s, (a + 1) / 2, False)[0]
    return +(2 ** (-s) * h)


@precise
def lerch_phi_neg1_sderiv(s, a) -> mpf:
    """``d/ds Phi(-1, s, a) = -sum_{n>=0} (-1)^n ln(n+a) (n+a)^-s``."""
    s, a = to_real(s), to_real(a)
    if a <= 0:
        raise DomainError(f"Phi(-1, s, a) needs a > 0, got a={a}")
    if abs(s - 1) < mpf(1) / 4:
        return +alternating_sum(lambda k: -log(k + a) * (k + a) ** (-s))
    h = _euler_maclaurin(s, a / 2, True)
    g = _euler_maclaurin(s, (a + 1) / 2, True)
    return +(2 ** (-s) * ((h[1] - g[1]) - log(2) * (h[0] - g[0])))


@precise
def zeta_sderiv_diff_limit_s1(x) -> mpf:
    """``lim_{s->1} [zeta'(s, x) - zeta'(s, x + 1/2)]``.

    Equal to ``d/ds [2^s Phi(-1, s, 2x)]`` at ``s = 1``, i.e.
    ``2 [ln 2 Phi(-1, 1, 2x) + Phi_s(-1, 1, 2x)]``.
    """
    x = to_real(x)
    if x <= 0:
        raise DomainError(f"needs x > 0, got x={x}")
    phi = alternating_sum(lambda k: 1 / (k + 2 * x))
    dphi = alternating_sum(lambda k: -log(k + 2 * x) / (k + 2 * x))
    return +(2 * (log(2) * phi + dphi))


@precise
def zeta_half_diff(s, x) -> mpf:
    """``zeta(s, x) - zeta(s, x + 1/2)``; at ``s = 1`` the limit ``psi(x+1/2) - psi(x)``."""
    s, x = to_real(s), to_real(x)
    if x <= 0:
        raise DomainError(f"needs x > 0, got x={x}")
    if s == 1:
        return +(polygamma(0, x + mpf(1) / 2) - polygamma(0, x))
    if abs(s - 1) < mpf(1) / 4:
        return +(2 ** s * lerch_phi_neg1(s, 2 * x, method="series"))
    return +(_euler_maclaurin(s, x, False)[0] - _euler_maclaurin(s, x + mpf(1) / 2, False)[0])


@precise
def zeta_sderiv_half_diff(s, x) -> mpf:
    """``zeta'(s, x) - zeta'(s, x + 1/2)``, continuous through ``s = 1``."""
    s, x = to_real(s), to_real(x)
    if x <= 0:
        raise DomainError(f"needs x > 0, got x={x}")
    if s == 1:
        return zeta_sderiv_diff_limit_s1(x)
    if abs(s - 1) < mpf(1) / 4:
        # d/ds [2^s Phi(-1, s, 2x)]
        a = 2 * x
        phi = alternating_sum(lambda k: (k + a) ** (-s))
        dphi = alternating_sum(lambda k: -log(k + a) * (k + a) ** (-s))
        return +(2 ** s * (log(2) * phi + dphi))
    return +(_euler_maclaurin(s, x, True)[1] - _euler_maclaurin(s, x + mpf(1) / 2, True)[1])
