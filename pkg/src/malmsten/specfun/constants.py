"""Mathematical constants, computed once per working precision.

``euler_gamma``, ``pi`` and ``ln2`` come from mpmath; the rest are computed
with this package's own special functions.
"""

from __future__ import annotations

import threading

from mpmath import mp, mpf

from ..context import precise
from .beta import dirichlet_beta
from .gamma import polygamma
from .hurwitz import _euler_maclaurin

__all__ = ["constant", "CONSTANT_NAMES", "euler_gamma", "catalan", "zeta_int", "psi_quarter"]

_cache: dict[tuple[str, int], mpf] = {}
_lock = threading.Lock()


def _compute(name: str) -> mpf:
    if name == "euler_gamma":
        return +mp.euler
    if name == "pi":
        return +mp.pi
    if name == "ln2":
        return +mp.ln2
    if name == "catalan":
        return dirichlet_beta(2)
    if name.startswith("zeta"):
        return _euler_maclaurin(mpf(int(name[4:])), mpf(1), False)[0]
    if name.startswith("psi") and name.endswith("_quarter"):
        return polygamma(int(name[3:-8]), mpf(1) / 4)
    raise KeyError(name)


CONSTANT_NAMES = (
    "euler_gamma", "pi", "ln2", "catalan", "zeta3", "zeta5", "zeta7",
    "psi1_quarter", "psi3_quarter", "psi5_quarter", "psi7_quarter",
)


@precise
def constant(name: str) -> mpf:
    """Look up a named constant at the current working precision.

    Names are those in :data:`CONSTANT_NAMES`; ``zetaK`` and ``psiK_quarter``
    also accept other integer ``K``.
    """
    key = (name, mp.prec)
    v = _cache.get(key)
    if v is None:
        v = _compute(name)
        with _lock:
            _cache[key] = v
    return v


def euler_gamma() -> mpf:
    return constant("euler_gamma")


def catalan() -> mpf:
    return constant("catalan")


def zeta_int(k: int) -> mpf:
    return constant(f"zeta{k}")


def psi_quarter(k: int) -> mpf:
    return constant(f"psi{k}_quarter")
