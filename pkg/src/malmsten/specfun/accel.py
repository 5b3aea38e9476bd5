"""Acceleration of alternating series.

Algorithm 1 of Cohen, Rodriguez Villegas and Zagier: for
``S = sum_{k>=0} (-1)^k a_k`` with ``a_k = int_0^1 x^k w(x) dx`` the
``n``-term weighted sum below has error at most
``2 * int |w| / (3 + sqrt 8)^n``, whatever the sign of ``w``.
"""

from __future__ import annotations

import math
from typing import Callable

from mpmath import mp, mpf, sqrt


def terms_for_digits(dps: int) -> int:
    # (3 + sqrt 8)^n >= 10^dps, plus slack for the int |w| factor
    return math.ceil(dps / math.log10(3 + math.sqrt(8))) + 8


def alternating_sum(term: Callable[[int], mpf], n: int | None = None) -> mpf:
    """``sum_{k>=0} (-1)^k term(k)`` by the CRVZ weighted partial sum."""
    if n is None:
        n = terms_for_digits(mp.dps)
    d = (3 + sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b = mpf(-1)
    c = -d
    s = mpf(0)
    for k in range(n):
        c = b - c
        s += c * term(k)
        b = (k + n) * (k - n) * b / ((k + mpf(1) / 2) * (k + 1))
    return s / d
