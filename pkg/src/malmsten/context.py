"""Precision handling.

All numeric routines work in the ambient :mod:`mpmath` context.  A
*precision* ``P`` is a number of decimal digits the caller wants to be
correct; the working precision carries extra guard digits on top of it::

    with precision(50):
        x = hurwitz_zeta(3, 0.25)

Public functions are wrapped with :func:`precise`, which enters the default
precision when no context is active, and accepts a ``prec=`` keyword to
override it for a single call.
"""

from __future__ import annotations

import contextvars
import functools
import math
from contextlib import contextmanager
from fractions import Fraction

import mpmath
from mpmath import mp

from .errors import DomainError

DEFAULT_PRECISION = 40
MIN_PRECISION = 15

_active = contextvars.ContextVar("malmsten_precision", default=None)


def guard_digits(P: int) -> int:
    return 10 + math.ceil(P / 4)


def working_dps(P: int) -> int:
    return P + guard_digits(P)


@contextmanager
def precision(P: int = DEFAULT_PRECISION):
    """Run the enclosed block with ``P`` correct digits (plus guard digits)."""
    P = int(P)
    if P < MIN_PRECISION:
        raise DomainError(f"precision must be at least {MIN_PRECISION} digits, got {P}")
    token = _active.set(P)
    try:
        with mp.workdps(working_dps(P)):
            yield P
    finally:
        _active.reset(token)


def current_precision() -> int:
    """The active target precision ``P`` (default when no context is open)."""
    P = _active.get()
    return DEFAULT_PRECISION if P is None else P


def precise(func):
    """Decorator: evaluate ``func`` inside a precision context.

    ``prec=`` (keyword) forces a precision for the call; otherwise the
    enclosing context is reused, or the default one is opened.
    """

    @functools.wraps(func)
    def wrapper(*args, prec=None, **kwargs):
        if prec is None and _active.get() is not None:
            return func(*args, **kwargs)
        with precision(current_precision() if prec is None else prec):
            return func(*args, **kwargs)

    return wrapper


def tolerance() -> mpmath.mpf:
    """Relative accuracy promised at the active precision: ``10**(2-P)``."""
    return mpmath.mpf(10) ** (2 - current_precision())


def to_real(x) -> mpmath.mpf:
    """Convert ints, Fractions, decimal strings or mpf values to an mpf."""
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    if isinstance(x, mpmath.mpf):
        return x
    if isinstance(x, str) and "/" in x:
        return to_real(Fraction(x))
    return mpmath.mpf(x)


def as_fraction(x):
    """Return ``x`` as a Fraction when it is exactly rational, else ``None``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x) if math.isfinite(x) else None
    if isinstance(x, mpmath.mpf):
        if not mpmath.isfinite(x):
            return None
        man, exp = x.man_exp
        if exp >= 0:
            return Fraction(int(man) << exp)
        return Fraction(int(man), 1 << -exp)
    return None


def is_integer(x) -> bool:
    q = as_fraction(x)
    return q is not None and q.denominator == 1
