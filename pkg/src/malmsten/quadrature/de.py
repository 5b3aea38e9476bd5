"""Double-exponential quadrature.

``tanh_sinh`` handles finite intervals, ``exp_sinh`` the half line
``(0, inf)``.  Both run the trapezoid rule in the transformed variable with
step ``h = 2^-level``, reusing every earlier node when the level increases.
The error estimate is the change between successive levels.

Finite-interval integrands may ask for the distances from each node to the
two endpoints (``with_distances=True``).  Those distances are computed
without cancellation, which matters for integrands that are singular or
cancel catastrophically at an endpoint, such as ``ln ln(1/x)`` near 1.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Callable

from mpmath import mp, mpf, exp, sinh, cosh, pi, isfinite

from ..errors import ConvergenceError, DomainError

__all__ = ["QuadResult", "tanh_sinh", "exp_sinh", "integrate_2d_unit_square"]

MAX_LEVEL = 10
MIN_LEVEL = 3


@dataclass(frozen=True)
class QuadResult:
    """Outcome of a quadrature.

    Attributes
    ----------
    value : mpf
        The estimate at the finest level reached.
    error_estimate : mpf
        ``|S_k - S_(k-1)|`` between the last two levels.
    evaluations : int
        Number of integrand calls.
    converged : bool
        Whether ``error_estimate`` met the requested tolerance.
    """

    value: mpf
    error_estimate: mpf
    evaluations: int
    converged: bool
    levels: int = 0

    def require(self) -> "QuadResult":
        """Return ``self``, or raise :class:`ConvergenceError` if not converged."""
        if not self.converged:
            raise ConvergenceError(
                f"quadrature did not converge (estimate {mp.nstr(self.value, 15)}, "
                f"error {mp.nstr(self.error_estimate, 3)})",
                partial=self,
            )
        return self


_node_cache: dict[tuple, list] = {}
_node_lock = threading.Lock()


def _ts_tmax(dps: int) -> float:
    # weights fall below 10^-dps once (pi/2) sinh t reaches about dps ln10 / 2
    return math.asinh(dps * math.log(10) / math.pi) + 0.3


def _ts_nodes(level: int) -> list[tuple[mpf, mpf]]:
    """New tanh-sinh nodes at ``level`` on [-1, 1], for ``t > 0`` and (at level 0) ``t = 0``.

    Each entry is ``(q, w)`` where the node is ``1 - q`` and ``w`` its weight
    (without the factor ``h``).  Nodes for ``-t`` mirror to ``-1 + q``.
    """
    key = ("ts", mp.prec, level)
    nodes = _node_cache.get(key)
    if nodes is not None:
        return nodes
    h = mpf(2) ** (-level)
    tmax = _ts_tmax(mp.dps)
    nodes = []
    k = 0 if level == 0 else 1
    step = 1 if level == 0 else 2
    hp = pi / 2
    while float(k * h) <= tmax:
        t = k * h
        u = hp * sinh(t)
        e2u = exp(2 * u)
        q = 2 / (1 + e2u)  # 1 - tanh(u)
        cu = cosh(u)
        w = hp * cosh(t) / (cu * cu)
        nodes.append((q, w))
        k += step
    with _node_lock:
        _node_cache[key] = nodes
    return nodes


def _check_value(v, where):
    if not isfinite(v):
        raise DomainError(f"integrand is not finite at {where}")
    return v


def tanh_sinh(
    f: Callable,
    a,
    b,
    tol,
    *,
    with_distances: bool = False,
    max_level: int = MAX_LEVEL,
    min_level: int = MIN_LEVEL,
) -> QuadResult:
    """Integrate ``f`` over the finite interval ``[a, b]``.

    With ``with_distances`` the integrand is called as ``f(x, x - a, b - x)``
    where both distances are accurate even when tiny.
    """
    a, b = mpf(a), mpf(b)
    tol = mpf(tol)
    L = b - a
    half = L / 2
    total = mpf(0)
    prev = None
    evals = 0
    err = inf_like()
    for level in range(max_level + 1):
        h = mpf(2) ** (-level)
        for q, w in _ts_nodes(level):
            d = half * q  # distance to the nearer endpoint
            if q == 1:  # t = 0, the midpoint
                x = a + half
                v = f(x, half, half) if with_distances else f(x)
                total += w * _check_value(v, x)
                evals += 1
                continue
            xr, xl = b - d, a + d
            if with_distances:
                vr = f(xr, L - d, d)
                vl = f(xl, d, L - d)
            else:
                vr = f(xr)
                vl = f(xl)
            total += w * (_check_value(vr, xr) + _check_value(vl, xl))
            evals += 2
        est = half * h * total
        if prev is not None:
            err = abs(est - prev)
            if level >= min_level and err <= tol * max(1, abs(est)):
                return QuadResult(+est, err, evals, True, level)
        prev = est
    return QuadResult(+prev, err, evals, False, max_level)


def inf_like():
    return mpf(10) ** 10


def _es_nodes(level: int, tmin: float, tmax: float) -> list[tuple[float, mpf, mpf]]:
    """New exp-sinh nodes ``(t, x, w)`` at ``level``, ordered by increasing ``|t|``."""
    key = ("es", mp.prec, level, tmin, tmax)
    nodes = _node_cache.get(key)
    if nodes is not None:
        return nodes
    h = mpf(2) ** (-level)
    hp = pi / 2
    nodes = []
    k = 0 if level == 0 else 1
    step = 1 if level == 0 else 2
    while True:
        added = False
        for sgn in ((1,) if k == 0 else (1, -1)):
            t = sgn * k * h
            if -tmin <= float(t) <= tmax:
                x = exp(hp * sinh(t))
                nodes.append((float(t), x, hp * cosh(t) * x))
                added = True
        if not added:
            break
        k += step
    with _node_lock:
        _node_cache[key] = nodes
    return nodes


def exp_sinh(
    f: Callable,
    tol,
    *,
    cutoff=None,
    max_level: int = MAX_LEVEL,
    min_level: int = MIN_LEVEL,
) -> QuadResult:
    """Integrate ``f`` over ``(0, inf)``.

    Parameters
    ----------
    f : callable
        Integrand of one mpf argument.
    tol : real
        Relative tolerance on the level-to-level change.
    cutoff : real, optional
        Nodes beyond ``cutoff`` are skipped; use it when the integrand is known
        to be negligible there (exponential decay).  Without it, the upper tail
        is truncated once the weighted terms stay below the working epsilon.
    """
    tol = mpf(tol)
    span = math.asinh(2 * (mp.dps + 5) * math.log(10) / math.pi)
    eps = mpf(10) ** (-mp.dps)
    cutoff = None if cutoff is None else mpf(cutoff)
    total = mpf(0)
    biggest = mpf(0)
    prev = None
    evals = 0
    err = inf_like()
    for level in range(max_level + 1):
        h = mpf(2) ** (-level)
        quiet = 0
        for t, x, w in _es_nodes(level, span, span):
            if t > 0 and cutoff is not None and x > cutoff:
                continue
            if t > 0 and quiet >= 4:
                continue
            v = f(x)
            evals += 1
            term = w * _check_value(v, x)
            total += term
            mag = abs(term)
            if mag > biggest:
                biggest = mag
            if t > 0 and x > 1:
                quiet = quiet + 1 if mag <= eps * biggest else 0
        est = h * total
        if prev is not None:
            err = abs(est - prev)
            if level >= min_level and err <= tol * max(1, abs(est)):
                return QuadResult(+est, err, evals, True, level)
        prev = est
    return QuadResult(+prev, err, evals, False, max_level)


def integrate_2d_unit_square(
    f: Callable, tol=mpf("1e-8"), *, max_level: int = 6, min_level: int = MIN_LEVEL
) -> QuadResult:
    """Integrate ``f(x, y)`` over ``[0, 1]^2`` with a tensor-product tanh-sinh rule."""
    tol = mpf(tol)
    half = mpf(1) / 2
    pts: list[tuple[mpf, mpf]] = []  # (x, w) over all levels so far
    total = mpf(0)
    prev = None
    evals = 0
    err = inf_like()
    for level in range(max_level + 1):
        h = mpf(2) ** (-level)
        new = []
        for q, w in _ts_nodes(level):
            d = half * q
            if q == 1:
                new.append((half, w * half))
            else:
                new.append((1 - d, w * half))
                new.append((d, w * half))
        old = pts
        pts = old + new
        for x, wx in new:
            for y, wy in pts:
                total += wx * wy * f(x, y)
                evals += 1
        for x, wx in old:
            for y, wy in new:
                total += wx * wy * f(x, y)
                evals += 1
        est = h * h * total
        if prev is not None:
            err = abs(est - prev)
            if level >= min_level and err <= tol * max(1, abs(est)):
                return QuadResult(+est, err, evals, True, level)
        prev = est
    return QuadResult(+prev, err, evals, False, max_level)
