"""Catalog of integrands used as independent numerical oracles.

Every integrand is written in a form that is free of cancellation near its
singular endpoints, so the double-exponential rules can sample as close to
the endpoints as the working precision allows.

The four integral sequences ``Delta_n``, ``lambda_n``, ``delta_n`` and
``chi_n`` each come in five equivalent forms:

``hyperbolic``
    over ``(0, inf)`` in terms of ``sech x``.
``reciprocal``
    the image of the hyperbolic form under ``x -> 1/x``.
``lnln01``
    over ``(0, 1)`` after ``x -> -ln x``; integrable ``ln ln(1/x)`` or
    ``1/ln^2 x`` behaviour at ``x = 1``.
``lnln1inf``
    over ``(1, inf)``, the image of ``lnln01`` under ``x -> 1/x``.
``arctan``
    over ``(pi/4, pi/2)`` after ``x -> tan x`` applied to ``lnln1inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from mpmath import (
    mp,
    mpf,
    atan,
    atanh,
    cos,
    cosh,
    exp,
    expm1,
    log,
    log1p,
    pi,
    sin,
    sinh,
    tan,
    tanh,
)

from ..context import current_precision, precise, to_real
from ..errors import DomainError
from .de import QuadResult, exp_sinh, tanh_sinh

__all__ = [
    "FORMS",
    "SEQUENCES",
    "IntegrandSpec",
    "integrate",
    "sequence_spec",
    "oracle_sequence",
    "named_spec",
    "oracle_named",
    "list_integrands",
]

FORMS = ("hyperbolic", "reciprocal", "lnln01", "lnln1inf", "arctan")
SEQUENCES = ("Delta", "lambda", "delta", "chi")

# Domains understood by ``integrate``.
_HALF_LINE = "0,inf"  # f(x), x in (0, inf)
_UNIT = "0,1"  # f(x, x, 1 - x)
_ONE_INF = "1,inf"  # f(t) with x = 1 + t, t in (0, inf)
_ARCTAN = "pi/4,pi/2"  # f(x, x - pi/4, pi/2 - x)


@dataclass(frozen=True)
class IntegrandSpec:
    """A catalogued integrand.

    Attributes
    ----------
    name : str
        Catalog identifier (a sequence name or a named integral).
    form : str
        One of ``hyperbolic``, ``reciprocal``, ``lnln01``, ``lnln1inf``,
        ``arctan`` or ``custom``.
    parameters : dict
        Parameter values the integrand was built with.
    domain : str
        Integration interval.
    func : callable
        The integrand, in the calling convention of its domain.
    profile : str
        Endpoint behaviour of the integrand.
    cutoff : mpf or None
        Point beyond which a half-line integrand is negligible.
    """

    name: str
    form: str
    parameters: dict
    domain: str
    func: Callable = field(repr=False, compare=False)
    profile: str = ""
    cutoff: object = None


def _check_tol(tol):
    tol = to_real(tol)
    floor = mpf(10) ** (2 - current_precision())
    if not tol > 0 or tol < floor * (1 - mpf(10) ** -5):
        raise DomainError(f"tolerance must be at least 10^(2-P) = {mp.nstr(floor, 3)}")
    return tol


@precise
def integrate(spec: IntegrandSpec, tol=None) -> QuadResult:
    """Integrate a catalogued integrand over its domain.

    ``tol`` defaults to ``10^(2-P)``; smaller values are rejected.
    """
    tol = _check_tol(mpf(10) ** (2 - current_precision()) if tol is None else tol)
    if spec.domain == _HALF_LINE or spec.domain == _ONE_INF:
        return exp_sinh(spec.func, tol, cutoff=spec.cutoff)
    if spec.domain == _UNIT:
        return tanh_sinh(spec.func, 0, 1, tol, with_distances=True)
    if spec.domain == _ARCTAN:
        return tanh_sinh(spec.func, pi / 4, pi / 2, tol, with_distances=True)
    raise DomainError(f"unknown domain {spec.domain!r}")


# ---------------------------------------------------------------------------
# stable building blocks


def _huge() -> mpf:
    # beyond this argument e^-x is far below the working epsilon
    return mpf(4 * mp.dps * math.log(10) + 50)


def _sech_pow(x, n):
    if n * x > _huge():
        return mpf(0)
    return cosh(x) ** (-n)


def _ln_cosh(z):
    """``ln cosh z`` with full relative accuracy for small and large ``z``."""
    if z <= 1:
        return log1p(2 * sinh(z / 2) ** 2)
    return z + log1p(exp(-2 * z)) - log(2)


def _one_minus_tanh(z):
    return 2 / (exp(2 * z) + 1)


def _one_minus_sech_pow(x, k):
    """``1 - sech^k x``, accurate as ``x -> 0``."""
    if k == 0:
        return mpf(0)
    return -expm1(-k * _ln_cosh(x))


@lru_cache(maxsize=None)
def _chi_numerator(n: int) -> tuple[Fraction, ...]:
    """Coefficients of ``((1+u^2)^(n-1) - 2^(n-1) u^(n-1)) / (1-u)^2`` in powers of ``d = 1-u``.

    The numerator has a double root at ``u = 1``; dividing it out exactly
    removes the cancellation against ``ln^2 u`` at that endpoint.
    """
    # polynomial in d: u = 1 - d
    def mul(p, q):
        r = [Fraction(0)] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            for j, b in enumerate(q):
                r[i + j] += a * b
        return r

    def power(p, e):
        r = [Fraction(1)]
        for _ in range(e):
            r = mul(r, p)
        return r

    u = [Fraction(1), Fraction(-1)]
    one_plus_u2 = [Fraction(2), Fraction(-2), Fraction(1)]
    a = power(one_plus_u2, n - 1)
    b = [c * 2 ** (n - 1) for c in power(u, n - 1)]
    size = max(len(a), len(b))
    num = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(size)]
    if n > 1 and (num[0] != 0 or num[1] != 0):
        raise AssertionError("expected a double root at u = 1")
    return tuple(num[2:])


def _chi_num_over_d2(n, u, d):
    if n == 1:
        return mpf(0)
    if abs(d) < mpf(1) / 2:
        acc = mpf(0)
        for c in reversed(_chi_numerator(n)):
            acc = acc * d + mpf(c.numerator) / c.denominator
        return acc
    return ((1 + u * u) ** (n - 1) - mpf(2) ** (n - 1) * u ** (n - 1)) / (d * d)


# ---------------------------------------------------------------------------
# the four sequences in five forms


def _seq_hyperbolic(name, n):
    if name == "Delta":
        return lambda x: log(x) * _sech_pow(x, n)
    if name == "lambda":
        return lambda x: tanh(x) * _sech_pow(x, n) / x
    if name == "delta":
        return lambda x: 2 * sinh(x / 2) ** 2 * _sech_pow(x, n + 1) / (x * x)
    return lambda x: _sech_pow(x, 1) * _one_minus_sech_pow(x, n - 1) / (x * x)


def _seq_reciprocal(name, n):
    if name == "Delta":
        return lambda x: -log(x) * _sech_pow(1 / x, n) / (x * x)
    if name == "lambda":
        return lambda x: tanh(1 / x) * _sech_pow(1 / x, n) / x
    if name == "delta":
        return lambda x: _sech_pow(1 / x, n) * 2 * sinh(1 / (2 * x)) ** 2 * _sech_pow(1 / x, 1)
    return lambda x: _sech_pow(1 / x, 1) * _one_minus_sech_pow(1 / x, n - 1)


def _seq_lnln(name, n, u, d, ell):
    """Shared ``lnln`` integrand at ``u`` with ``d = 1 - u`` and ``ell = |ln u|``."""
    two_n = mpf(2) ** n
    q = 1 + u * u
    if name == "Delta":
        return two_n * u ** (n - 1) * log(ell) / q ** n
    if name == "lambda":
        return two_n * u ** (n - 1) * tanh(ell) / (ell * q ** n)
    if name == "delta":
        return two_n * u ** (n - 1) * (d / ell) ** 2 / q ** (n + 1)
    return 2 * _chi_num_over_d2(n, u, d) * (d / ell) ** 2 / q ** n


def _seq_lnln01(name, n):
    def f(u, _da, d):
        ell = -log1p(-d) if d < mpf(1) / 2 else -log(u)
        return _seq_lnln(name, n, u, d, ell)

    return f


def _seq_lnln1inf(name, n):
    def f(t):
        return _seq_lnln(name, n, 1 + t, -t, log1p(t))

    return f


def _seq_arctan(name, n):
    def f(_x, da, db):
        if da <= db:  # x = pi/4 + da
            s2 = cos(2 * da)
            ell = 2 * atanh(tan(da))
            gap = 2 * sin(da) ** 2  # 1 - sin 2x
        else:  # x = pi/2 - db
            s2 = sin(2 * db)
            ell = -log(tan(db))
            gap = 1 - s2
        if name == "Delta":
            return 2 * log(ell) * s2 ** (n - 1)
        if name == "lambda":
            return 2 * tanh(ell) / ell * s2 ** (n - 1)
        if name == "delta":
            return 2 * gap * s2 ** (n - 1) / ell ** 2
        if da <= db:
            return -2 * expm1((n - 1) * log1p(-gap)) / ell ** 2
        return 2 * (1 - s2 ** (n - 1)) / ell ** 2

    return f


_PROFILES = {
    "hyperbolic": "(0,inf); bounded at 0 (log singularity for Delta); decays like e^(-nx)",
    "reciprocal": "(0,inf); vanishes faster than any power at 0; algebraic decay at inf",
    "lnln01": "(0,1); bounded at 0; log-log singularity (Delta) or removable 0/0 at 1",
    "lnln1inf": "(1,inf); log-log singularity (Delta) or removable 0/0 at 1; algebraic decay",
    "arctan": "(pi/4,pi/2); log-log singularity (Delta) or removable 0/0 at pi/4; bounded at pi/2",
}


def sequence_spec(name: str, n: int, form: str, a=1, b=1) -> IntegrandSpec:
    """Build the integrand of ``name_n`` in the requested form.

    ``a`` and ``b`` apply to ``Delta`` only, through
    ``Delta_n(a, b) = C_n ln(a/b)/b + Delta_n(1, 1)/b`` with ``C_n = int sech^n``,
    so the oracle integrates ``ln x sech^n x`` and ``sech^n x`` separately.
    """
    if name not in SEQUENCES:
        raise DomainError(f"unknown sequence {name!r}; expected one of {SEQUENCES}")
    if form not in FORMS:
        raise DomainError(f"unknown form {form!r}; expected one of {FORMS}")
    if int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    n = int(n)
    builders = {
        "hyperbolic": (_seq_hyperbolic, _HALF_LINE),
        "reciprocal": (_seq_reciprocal, _HALF_LINE),
        "lnln01": (_seq_lnln01, _UNIT),
        "lnln1inf": (_seq_lnln1inf, _ONE_INF),
        "arctan": (_seq_arctan, _ARCTAN),
    }
    build, domain = builders[form]
    cutoff = None
    if form == "hyperbolic":
        decay = 1 if name == "chi" else n
        cutoff = ((mp.dps + 10) * math.log(10) + n * math.log(2) + 10) / decay
    params = {"n": n}
    if name == "Delta":
        params.update(a=a, b=b)
    return IntegrandSpec(name, form, params, domain, build(name, n), _PROFILES[form], cutoff)


@precise
def oracle_sequence(name: str, n: int, form: str = "hyperbolic", a=1, b=1, tol=None) -> QuadResult:
    """Numerically integrate ``Delta_n(a, b)``, ``lambda_n``, ``delta_n`` or ``chi_n``.

    Examples
    --------
    >>> from malmsten import precision
    >>> from malmsten.quadrature import oracle_sequence
    >>> with precision(30):
    ...     r = oracle_sequence("Delta", 1, "lnln01")
    >>> round(float(r.value), 8)
    -0.52088561
    """
    spec = sequence_spec(name, n, form, a, b)
    core = integrate(spec, tol)
    if name != "Delta":
        return core
    a, b = to_real(a), to_real(b)
    if a <= 0 or b <= 0:
        raise DomainError(f"a and b must be positive, got a={a}, b={b}")
    if a == b == 1:
        return core
    scale = named_spec("sech_power", {"n": n})
    c = integrate(scale, tol)
    value = (c.value * log(a / b) + core.value) / b
    err = (c.error_estimate * abs(log(a / b)) + core.error_estimate) / b
    return QuadResult(
        value,
        err,
        core.evaluations + c.evaluations,
        core.converged and c.converged,
        max(core.levels, c.levels),
    )


# ---------------------------------------------------------------------------
# named integrals


def _p(params, key, default=None):
    if key in params:
        return to_real(params[key])
    if default is None:
        raise DomainError(f"missing parameter {key!r}")
    return to_real(default)


def _pos(v, key):
    if v <= 0:
        raise DomainError(f"{key} must be positive, got {v}")
    return v


def _nonzero(v, key):
    if v == 0:
        raise DomainError(f"{key} must be nonzero")
    return abs(v)


def _tanh_minus_rational(a, y):
    # tanh(at)/t - t/(t^2+y^2), rewritten for large t
    def f(t):
        if a * t <= 1:
            return tanh(a * t) / t - t / (t * t + y * y)
        return y * y / (t * (t * t + y * y)) - _one_minus_tanh(a * t) / t

    return f


def _atan_tail(y, t):
    """``1/t - arctan(y/t)/y`` for ``y > 0``."""
    return 1 / t - atan(y / t) / y


def _build_sech_power(p):
    n = int(_pos(_p(p, "n", 1), "n"))
    return _HALF_LINE, (lambda x: _sech_pow(x, n)), "(0,inf); bounded; decays like e^(-nx)", n


def _build_rational_power(p):
    n = int(_pos(_p(p, "n", 1), "n"))
    return _UNIT, (lambda x, _da, _db: x ** (n - 1) / (1 + x * x) ** n), "(0,1); bounded polynomial ratio", None


def _build_cosine_sech(p):
    tau = _p(p, "tau", 1)
    return _HALF_LINE, (lambda x: cos(tau * x) * _sech_pow(x, 1)), "(0,inf); bounded; oscillatory, decays like e^(-x)", 1


def _build_log_quadratic_sech(p):
    a = _p(p, "a", 0)
    b = _pos(_p(p, "b", 1), "b")
    if a == 0:
        f = lambda x: 2 * log(x) * _sech_pow(b * x, 1)
    else:
        f = lambda x: log(x * x + a * a) * _sech_pow(b * x, 1)
    return _HALF_LINE, f, "(0,inf); log singularity at 0 when a = 0; decays like e^(-bx)", b


def _build_kappa(p):
    y = _p(p, "y", 1)
    if y == 0:
        return _HALF_LINE, (lambda t: mpf(0)), "identically zero", None
    y = abs(y)
    h = pi / 2
    return _HALF_LINE, (lambda t: tanh(h * t) * y * y / (t * (t * t + y * y))), "(0,inf); bounded; decays like t^-3", None


def _build_kappa1(p):
    y = _nonzero(_p(p, "y", 1), "y")
    h = pi / 2
    return _HALF_LINE, (lambda t: t / (t * t + y * y) * _one_minus_tanh(h * t)), "(0,inf); vanishes at 0; decays like e^(-pi t)", None


def _build_kappa2(p):
    y = _nonzero(_p(p, "y", 1), "y")
    return _HALF_LINE, _tanh_minus_rational(pi / 2, y), "(0,inf); bounded; decays like t^-3", None


def _build_tanh_rational(which):
    def build(p):
        a = _pos(_p(p, "a", 1), "a")
        y = _p(p, "y", 1)
        if which == "eq31":
            if y == 0:
                return _HALF_LINE, (lambda t: mpf(0)), "identically zero", None
            y = abs(y)
            return _HALF_LINE, (lambda t: tanh(a * t) * y * y / (t * (t * t + y * y))), "(0,inf); bounded; decays like t^-3", None
        y = _nonzero(y, "y")
        if which == "eq32":
            return _HALF_LINE, (lambda t: t / (t * t + y * y) * _one_minus_tanh(a * t)), "(0,inf); vanishes at 0; decays like e^(-2at)", None
        return _HALF_LINE, _tanh_minus_rational(a, y), "(0,inf); bounded; decays like t^-3", None

    return build


def _build_youpart(p):
    a = _pos(_p(p, "a", 1), "a")
    y = _nonzero(_p(p, "y", 1), "y")
    return _HALF_LINE, (lambda t: _one_minus_tanh(a * t) * atan(y / t)), "(0,inf); bounded; decays like e^(-2at)/t", None


def _build_younko(p):
    a = _pos(_p(p, "a", 1), "a")
    y = _nonzero(_p(p, "y", 1), "y")
    # ln(e^(at) sech(at)) = at - ln cosh(at)
    return _HALF_LINE, (lambda t: (a * t - _ln_cosh(a * t)) / (t * t + y * y)), "(0,inf); vanishes at 0; decays like t^-2", None


def _build_gamma_rep(rep):
    def build(p):
        a = _pos(_p(p, "a", 1), "a")
        y = _nonzero(_p(p, "y", 1), "y")
        if rep == 1:
            f = lambda t: tanh(a * t) * _atan_tail(y, t)
        elif rep == 2:
            f = lambda t: y * y / a * _ln_cosh(a * t) / (t * t * (t * t + y * y))
        elif rep == 3:
            f = lambda t: _ln_cosh(a * t) / (a * t * t) - t / (t * t + y * y)
        elif rep == 4:
            f = lambda t: _ln_cosh(a * t) / (a * t * t) - atan(y / t) / y
        else:
            f = lambda t: tanh(a * t) / t - atan(y / t) / y
        return _HALF_LINE, f, "(0,inf); bounded; algebraic decay", None

    return build


def _build_sech2_log(p):
    a = _pos(_p(p, "a", 1), "a")
    y = _p(p, "y", 0)
    if y == 0:
        f = lambda t: 2 * log(t) * _sech_pow(a * t, 2)
    else:
        f = lambda t: log(t * t + y * y) * _sech_pow(a * t, 2)
    return _HALF_LINE, f, "(0,inf); log singularity at 0 when y = 0; decays like e^(-2at)", 2 * a


def _build_ln2_repr(p):
    return _HALF_LINE, (lambda t: (t - _ln_cosh(t)) / (t * t + pi * pi)), "(0,inf); vanishes at 0; decays like t^-2", None


def _build_pi_repr(p):
    return _HALF_LINE, (lambda t: _one_minus_tanh(t) * atan(pi / t)), "(0,inf); bounded; decays like e^(-2t)/t", None


_NAMED: dict[str, tuple[Callable, str, tuple[str, ...]]] = {
    "sech_power": (_build_sech_power, "int_0^inf sech^n x dx", ("n",)),
    "rational_power": (_build_rational_power, "int_0^1 x^(n-1)/(1+x^2)^n dx", ("n",)),
    "cosine_sech": (_build_cosine_sech, "int_0^inf cos(tau x) sech x dx", ("tau",)),
    "log_quadratic_sech": (_build_log_quadratic_sech, "int_0^inf ln(x^2+a^2) sech(bx) dx", ("a", "b")),
    "valean_2b": (_build_kappa, "int_0^inf tanh(pi x/2)(1/x - x/(x^2+y^2)) dx", ("y",)),
    "kappa": (_build_kappa, "int_0^inf tanh(pi t/2)(1/t - t/(t^2+y^2)) dt", ("y",)),
    "kappa1": (_build_kappa1, "int_0^inf t/(t^2+y^2)(1 - tanh(pi t/2)) dt", ("y",)),
    "kappa2": (_build_kappa2, "int_0^inf (tanh(pi t/2)/t - t/(t^2+y^2)) dt", ("y",)),
    "tanh_rational_eq31": (_build_tanh_rational("eq31"), "int_0^inf tanh(at)(1/t - t/(t^2+y^2)) dt", ("a", "y")),
    "tanh_rational_eq32": (_build_tanh_rational("eq32"), "int_0^inf t/(t^2+y^2)(1 - tanh(at)) dt", ("a", "y")),
    "tanh_rational_eq34": (_build_tanh_rational("eq34"), "int_0^inf (tanh(at)/t - t/(t^2+y^2)) dt", ("a", "y")),
    "youpart": (_build_youpart, "int_0^inf (1 - tanh(at)) arctan(|y|/t) dt", ("a", "y")),
    "younko": (_build_younko, "int_0^inf ln(e^(at) sech(at))/(t^2+y^2) dt", ("a", "y")),
    "gamma_rep_1": (_build_gamma_rep(1), "int_0^inf tanh(at)(1/t - arctan(|y|/t)/|y|) dt", ("a", "y")),
    "gamma_rep_2": (_build_gamma_rep(2), "(y^2/a) int_0^inf ln cosh(at)/(t^2(t^2+y^2)) dt", ("a", "y")),
    "gamma_rep_3": (_build_gamma_rep(3), "int_0^inf (ln cosh(at)/(at^2) - t/(t^2+y^2)) dt", ("a", "y")),
    "gamma_rep_4": (_build_gamma_rep(4), "int_0^inf (ln cosh(at)/(at^2) - arctan(|y|/t)/|y|) dt", ("a", "y")),
    "gamma_rep_5": (_build_gamma_rep(5), "int_0^inf (tanh(at)/t - arctan(|y|/t)/|y|) dt", ("a", "y")),
    "sech2_log": (_build_sech2_log, "int_0^inf ln(t^2+y^2) sech^2(at) dt", ("a", "y")),
    "ln2_repr": (_build_ln2_repr, "int_0^inf ln(e^t sech t)/(t^2+pi^2) dt = 1 - ln 2", ()),
    "pi_repr": (_build_pi_repr, "int_0^inf (1 - tanh t) arctan(pi/t) dt = pi (1 - ln 2)", ()),
}


def list_integrands() -> list[tuple[str, str, tuple[str, ...]]]:
    """``(name, formula, parameter names)`` for every catalogued integral.

    The four sequences are listed first with parameter ``n`` (and ``a``, ``b``
    for ``Delta``); each accepts any of :data:`FORMS`.
    """
    rows = [
        ("Delta", "int_0^inf ln(ax) sech^n(bx) dx", ("n", "form", "a", "b")),
        ("lambda", "int_0^inf tanh x sech^n x / x dx", ("n", "form")),
        ("delta", "int_0^inf (1 - sech x) sech^n x / x^2 dx", ("n", "form")),
        ("chi", "int_0^inf (sech x - sech^n x) / x^2 dx", ("n", "form")),
    ]
    rows += [(k, v[1], v[2]) for k, v in _NAMED.items()]
    return rows


def named_spec(name: str, params: dict | None = None) -> IntegrandSpec:
    """Build a named catalog integrand (see :func:`list_integrands`)."""
    if name not in _NAMED:
        raise DomainError(f"unknown integrand {name!r}")
    params = dict(params or {})
    build, _formula, keys = _NAMED[name]
    unknown = set(params) - set(keys)
    if unknown:
        raise DomainError(f"unexpected parameters for {name}: {sorted(unknown)}")
    domain, func, profile, decay = build(params)
    cutoff = None
    if decay is not None:
        cutoff = ((mp.dps + 10) * math.log(10) + 10) / decay + 5
    return IntegrandSpec(name, "custom", params, domain, func, profile, cutoff)


@precise
def oracle_named(name: str, params: dict | None = None, tol=None) -> QuadResult:
    """Numerically integrate a named catalog integrand.

    Examples
    --------
    >>> from malmsten import precision
    >>> from malmsten.quadrature import oracle_named
    >>> with precision(30):
    ...     r = oracle_named("cosine_sech", {"tau": 1})
    >>> round(float(r.value), 10)
    0.6260201656
    """
    return integrate(named_spec(name, params), tol)
