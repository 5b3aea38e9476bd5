"""Exact combinatorics over the rationals.

Stirling cycle numbers, complete Bell polynomials, generalized harmonic
numbers, Bernoulli numbers/polynomials, and the two families of Stirling
polynomials:

* ``P_k(m, x)`` -- signed generalized Stirling polynomials, defined by

      (j+1)_m = sum_{k=0}^{m} (-1)^k P_k(m, x) (j+x)^(m-k),

* ``P_{k,n}(z)`` -- generalized Stirling polynomials, the coefficients of
  ``prod_{k=1}^{n-1} (k + x - z)`` in powers of ``x``.

Everything here is exact: values are :class:`fractions.Fraction` or
:class:`RationalPoly`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

Rational = Fraction


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


@dataclass(frozen=True)
class RationalPoly:
    """Dense univariate polynomial with Fraction coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``.  Trailing zeros are trimmed,
    so the zero polynomial has no coefficients and degree -1.
    """

    coeffs: tuple

    def __init__(self, coeffs: Iterable = ()):
        cs = [_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c) -> "RationalPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "RationalPoly":
        """Monic polynomial ``prod (x - r)``."""
        p = cls([1])
        for r in roots:
            p = p * cls([-_q(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        # Horner; works for Fractions and for mpf values alike
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _coerce(self, other) -> "RationalPoly":
        return other if isinstance(other, RationalPoly) else RationalPoly([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = RationalPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def compose(self, inner: "RationalPoly") -> "RationalPoly":
        """``self(inner(x))``."""
        acc = RationalPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def format(self, var: str = "x", ascending: bool = False) -> str:
        """Power-ordered string such as ``x^2 - 3x + 2`` (or ``2 - 3x + x^2``)."""
        if not self.coeffs:
            return "0"
        parts = []
        order = range(self.degree + 1) if ascending else range(self.degree, -1, -1)
        for i in order:
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                if mag == 1:
                    body = mono
                elif mag.denominator == 1:
                    body = f"{mag}{mono}"
                else:
                    body = f"({mag}){mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.format()


# ---------------------------------------------------------------------------
# Stirling cycle numbers

_stirling_rows: list[list[int]] = [[1]]
_stirling_lock = threading.Lock()


def _stirling_row(n: int) -> list[int]:
    if n < len(_stirling_rows):
        return _stirling_rows[n]
    with _stirling_lock:
        while len(_stirling_rows) <= n:
            m = len(_stirling_rows) - 1
            prev = _stirling_rows[m]
            # [m+1, k] = m [m, k] + [m, k-1]
            row = [0] * (m + 2)
            for k in range(1, m + 2):
                row[k] = (m * prev[k] if k <= m else 0) + prev[k - 1]
            _stirling_rows.append(row)
    return _stirling_rows[n]


def stirling_cycle(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind ``[n k]``."""
    if n < 0 or k < 0:
        raise ValueError("stirling_cycle needs nonnegative indices")
    if k > n:
        return 0
    return _stirling_row(n)[k]


def rising_factorial(a, n: int):
    """``(a)_n = a (a+1) ... (a+n-1)``; exact for int/Fraction ``a``."""
    out = 1
    for i in range(n):
        out *= a + i
    return out


def harmonic(n: int, m: int = 1) -> Fraction:
    """Generalized harmonic number ``H_n^(m) = sum_{k=1}^n k^-m``."""
    if n < 0 or m < 1:
        raise ValueError("harmonic needs n >= 0 and m >= 1")
    return sum((Fraction(1, k**m) for k in range(1, n + 1)), Fraction(0))


def bell_complete(n: int, xs: Sequence) -> Fraction:
    """Complete Bell polynomial ``B_n(x_1, ..., x_n)``.

    Uses ``B_{k+1} = sum_{i=0}^{k} C(k, i) B_i x_{k+1-i}``.
    """
    if n < 0:
        raise ValueError("bell_complete needs n >= 0")
    if len(xs) < n:
        raise ValueError(f"bell_complete({n}, ...) needs at least {n} arguments, got {len(xs)}")
    xs = [_q(x) for x in xs[:n]]
    B = [Fraction(1)]
    for k in range(n):
        B.append(sum(comb(k, i) * B[i] * xs[k - i] for i in range(k + 1)))
    return B[n]


def _harmonic_bell_args(m: int, r: int) -> list[Fraction]:
    # (H_m^(1), -H_m^(2), ..., (-1)^(r-1) (r-1)! H_m^(r))
    return [_sign(i) * factorial(i) * harmonic(m, i + 1) for i in range(r)]


def stirling_via_bell(n: int, r: int) -> Fraction:
    """``n!/r! * B_r(H_n^(1), -H_n^(2), ...)``, which equals ``[n+1, r+1]``."""
    if r < 0 or r > n:
        raise ValueError(f"stirling_via_bell needs 0 <= r <= n, got n={n}, r={r}")
    return Fraction(factorial(n), factorial(r)) * bell_complete(r, _harmonic_bell_args(n, r))


# ---------------------------------------------------------------------------
# Stirling polynomials

def sgsp_poly(k: int, m: int) -> RationalPoly:
    """Signed generalized Stirling polynomial ``P_k(m, x)``.

    Coefficient of ``x^j`` is ``(-1)^(j-k) C(j+m-k, m-k) [m+1, j+m-k+1]``.
    """
    if k < 0 or m < 0:
        raise ValueError("sgsp_poly needs nonnegative indices")
    if k > m:
        raise ValueError(f"P_k(m, x) is defined for k <= m, got k={k}, m={m}")
    return RationalPoly(
        _sign(j - k) * comb(j + m - k, m - k) * stirling_cycle(m + 1, j + m - k + 1)
        for j in range(k + 1)
    )


def sgsp_eval(k: int, m: int, x) -> Fraction:
    """``P_k(m, x)`` at a rational point."""
    return sgsp_poly(k, m)(_q(x))


def sgsp_eval_bell(k: int, m: int, x) -> Fraction:
    """``P_k(m, x)`` through the complete-Bell-polynomial representation."""
    if k < 0 or m < 0:
        raise ValueError("sgsp_eval_bell needs nonnegative indices")
    if k > m:
        raise ValueError(f"P_k(m, x) is defined for k <= m, got k={k}, m={m}")
    x = _q(x)
    args = _harmonic_bell_args(m, m)
    total = Fraction(0)
    for j in range(m - k, m + 1):
        term = Fraction(factorial(m), factorial(j)) * comb(j, m - k) * bell_complete(j, args)
        total += _sign(j - m) * x ** (j + k - m) * term
    return total


def gsp_poly(k: int, n: int) -> RationalPoly:
    """Generalized Stirling polynomial ``P_{k,n}(z)`` as a polynomial in ``z``.

    ``P_{k,n}(z) = sum_{j=k+1}^{n} (-z)^(j-k-1) C(j-1, k) [n, j]``.
    """
    if n < 1 or k < 0:
        raise ValueError("gsp_poly needs n >= 1 and k >= 0")
    if k >= n:
        raise ValueError(f"P_(k,n) is defined for k <= n-1, got k={k}, n={n}")
    coeffs = [Fraction(0)] * (n - k)
    for j in range(k + 1, n + 1):
        coeffs[j - k - 1] += _sign(j - k - 1) * comb(j - 1, k) * stirling_cycle(n, j)
    return RationalPoly(coeffs)


def gsp_eval(k: int, n: int, z) -> Fraction:
    """``P_{k,n}(z)`` at a rational point."""
    return gsp_poly(k, n)(_q(z))


# ---------------------------------------------------------------------------
# Bernoulli numbers and polynomials

_bernoulli: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli_number(n: int) -> Fraction:
    """Bernoulli number ``B_n`` with ``B_1 = -1/2``."""
    if n < 0:
        raise ValueError("bernoulli_number needs n >= 0")
    if n < len(_bernoulli):
        return _bernoulli[n]
    with _bernoulli_lock:
        while len(_bernoulli) <= n:
            m = len(_bernoulli)
            # sum_{k=0}^{m} C(m+1, k) B_k = 0
            s = sum(comb(m + 1, k) * _bernoulli[k] for k in range(m))
            _bernoulli.append(-s / (m + 1))
    return _bernoulli[n]


def bernoulli_poly(n: int, x) -> Fraction:
    """Bernoulli polynomial ``B_n(x) = sum_k C(n, k) B_k x^(n-k)``."""
    x = _q(x)
    return sum((comb(n, k) * bernoulli_number(k) * x ** (n - k) for k in range(n + 1)), Fraction(0))


def bernoulli_polynomial(n: int) -> RationalPoly:
    return RationalPoly(comb(n, k) * bernoulli_number(n - k) for k in range(n + 1))


# ---------------------------------------------------------------------------
# Identities from the remarks on P_k(m, x)

def generating_function_residual(m: int, j: int, x) -> Fraction:
    """``(j+1)_m - sum_k (-1)^k P_k(m,x) (j+x)^(m-k)``; zero for every ``j, x``."""
    x = _q(x)
    rhs = sum((-1) ** k * sgsp_eval(k, m, x) * (j + x) ** (m - k) for k in range(m + 1))
    return rising_factorial(Fraction(j + 1), m) - rhs


def functional_equation_rhs(n: int, x) -> Fraction:
    """``Gamma(x)/Gamma(x-n-1) * (psi(x) - psi(x-n-1))`` at rational ``x``.

    Both factors are rational: the gamma ratio is ``(x-n-1)_{n+1}`` and the
    digamma difference is ``sum_{j=1}^{n+1} 1/(x-j)``.  Points where a factor
    ``x - j`` vanishes are poles of the digamma difference and are rejected.
    """
    x = _q(x)
    if any(x == j for j in range(1, n + 2)):
        raise ValueError(f"x={x} is a pole of psi(x) - psi(x-{n + 1})")
    return rising_factorial(x - n - 1, n + 1) * sum((1 / (x - j) for j in range(1, n + 2)), Fraction(0))


def functional_equation_series(n: int) -> RationalPoly:
    """``sum_{j=0}^{n} s(n+2, j+2) (j+1) x^j`` with signed Stirling numbers."""
    return RationalPoly(
        _sign(n - j) * stirling_cycle(n + 2, j + 2) * (j + 1) for j in range(n + 1)
    )


def double_sum_identity(n: int) -> Fraction:
    """``sum_{k=0}^{2n} sum_{r=1}^{2n} (-1)^r r^(4n-2k) P_{2k}(4n+1, 2n+1)`` (equals 0)."""
    total = Fraction(0)
    for k in range(2 * n + 1):
        p = sgsp_eval(2 * k, 4 * n + 1, 2 * n + 1)
        total += p * sum((-1) ** r * r ** (4 * n - 2 * k) for r in range(1, 2 * n + 1))
    return total


def odd_product_identity(n: int) -> tuple[RationalPoly, RationalPoly]:
    """Both sides of ``prod_{k=1}^{(n-1)/2} (z^2 - (2k-1)^2/4) = sum_k P_{2k}(n-1, n/2) z^(n-2k-1)``.

    Defined for odd ``n``.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("the half-integer product identity needs odd n >= 1")
    z2 = RationalPoly([0, 0, 1])
    lhs = RationalPoly([1])
    for k in range(1, (n - 1) // 2 + 1):
        lhs = lhs * (z2 - Fraction((2 * k - 1) ** 2, 4))
    half = Fraction(n, 2)
    rhs_coeffs = [Fraction(0)] * n
    for k in range((n - 1) // 2 + 1):
        rhs_coeffs[n - 2 * k - 1] += sgsp_eval(2 * k, n - 1, half)
    return lhs, RationalPoly(rhs_coeffs)
