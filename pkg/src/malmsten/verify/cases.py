"""The default registry of identities.

Each :class:`IdentityCase` pairs two independent evaluations of the same
quantity.  Exact cases compare Fractions (or tuples of them) for equality;
numeric cases compare reals with a relative tolerance and an absolute floor.

Cases tagged :data:`QUARANTINE_TAG` evaluate a known-wrong variant of a
formula against the oracle.  They are expected to fail, document the
mismatch, and are excluded from the pass gate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from mpmath import mp, mpf, log, pi, im, re, sech

from .. import exactcomb as ec
from .. import closedform as cf
from .. import specfun as sf
from ..errors import DomainError
from ..quadrature import FORMS, SEQUENCES, oracle_named, oracle_sequence

__all__ = ["IdentityCase", "QUARANTINE_TAG", "GROUPS", "build_default_suite"]

QUARANTINE_TAG = "discrepancy"
GROUPS = ("exactcomb", "specfun", "closedform", "quadrature", "reduction")


@dataclass(frozen=True)
class IdentityCase:
    """One identity to check.

    Attributes
    ----------
    id : str
        Unique, stable identifier ``group/name/params``.
    description : str
        What is compared; always ends with the anchor in brackets.
    anchor : str
        Short name of the identity being exercised.
    lhs, rhs : callable
        Zero-argument evaluators, called inside the run's precision context.
    params : dict
        Parameters, for the report.
    tolerance : str
        Relative tolerance as a decimal string (``"0"`` for exact cases).
    kind : str
        ``"exact"`` or ``"numeric"``.
    group : str
        Module the case belongs to, used by run filters.
    tags : tuple of str
        Free-form tags; :data:`QUARANTINE_TAG` marks expected failures.
    skip_reason : str or None
        When set the case is reported as skipped and never evaluated.
    """

    id: str
    description: str
    anchor: str
    lhs: Callable = field(repr=False, compare=False)
    rhs: Callable = field(repr=False, compare=False)
    params: dict = field(default_factory=dict)
    tolerance: str = "0"
    kind: str = "numeric"
    group: str = "specfun"
    tags: tuple = ()
    skip_reason: str | None = None

    @property
    def quarantined(self) -> bool:
        return QUARANTINE_TAG in self.tags


def _pair(fn):
    """Split a ``(lhs, rhs)``-returning callable into two evaluators sharing one call."""
    cache = {}

    def get(i):
        key = mp.prec
        if key not in cache:
            cache.clear()
            cache[key] = fn()
        return cache[key][i]

    return (lambda: get(0)), (lambda: get(1))


def _oracle(fn):
    return lambda: fn().require().value


class _Builder:
    def __init__(self, P: int, seed: int, tol):
        self.P = P
        self.rng = random.Random(seed)
        self.cases: list[IdentityCase] = []
        self.tight = f"1e-{P - 10}"
        self.hermite = f"1e-{P - 6}"
        qtol = Fraction(str(tol)) if tol is not None else Fraction(1, 10**12)
        floor = Fraction(1, 10 ** (P - 2))
        self.qtol = str(float(max(qtol, floor)))
        self.oracle = str(float(max(10 * max(qtol, floor), Fraction(1, 10**12))))

    def add(self, id, description, anchor, lhs, rhs, *, params=None, tolerance=None,
            kind="numeric", group, tags=(), skip_reason=None):
        if not anchor:
            raise DomainError(f"case {id} has no anchor")
        if kind == "exact":
            tolerance = "0"
        self.cases.append(
            IdentityCase(
                id=id,
                description=f"{description} [{anchor}]",
                anchor=anchor,
                lhs=lhs,
                rhs=rhs,
                params=dict(params or {}),
                tolerance=tolerance or self.tight,
                kind=kind,
                group=group,
                tags=tuple(tags),
                skip_reason=skip_reason,
            )
        )

    def rational(self) -> Fraction:
        return Fraction(self.rng.randint(1, 20), self.rng.randint(1, 20))


def _q(v) -> str:
    return str(v)


# ---------------------------------------------------------------------------
# exact combinatorics


def _exact(b: _Builder):
    g = "exactcomb"
    for m in range(1, 21):
        xs = [b.rational() for _ in range(5)]

        def lhs(m=m, xs=xs):
            return tuple(ec.generating_function_residual(m, j, x) for j in range(11) for x in xs)

        b.add(f"{g}/generating-function/m={m}",
              f"(j+1)_m minus its Stirling-polynomial expansion, j=0..10, x in {[str(x) for x in xs]}",
              "generating function of P_k(m,x)", lhs, (lambda: (Fraction(0),) * 55),
              params={"m": m, "x": [str(x) for x in xs]}, kind="exact", group=g)
    for m in range(1, 16):
        x = b.rational()
        b.add(f"{g}/bridge/m={m}",
              f"P_(k,m+1)(x) = (-1)^(m-k) P_(m-k)(m,x) for all k, x={x}",
              "generalized vs signed Stirling polynomials",
              lambda m=m, x=x: tuple(ec.gsp_eval(k, m + 1, x) for k in range(m + 1)),
              lambda m=m, x=x: tuple((-1) ** (m - k) * ec.sgsp_eval(m - k, m, x) for k in range(m + 1)),
              params={"m": m, "x": str(x)}, kind="exact", group=g)
    for n in range(2, 31):
        b.add(f"{g}/odd-index-zeros/n={n}",
              "P_(2r-1)(n-1, n/2) = 0 for 2r <= n",
              "vanishing of odd-index P at x = n/2",
              lambda n=n: tuple(ec.sgsp_eval(2 * r - 1, n - 1, Fraction(n, 2)) for r in range(1, n // 2 + 1)),
              lambda n=n: (Fraction(0),) * (n // 2),
              params={"n": n}, kind="exact", group=g)
    for n in range(1, 11):
        b.add(f"{g}/functional-equation/n={n}",
              "P_n(n+1, x) = Gamma(x)/Gamma(x-n-1) (psi(x) - psi(x-n-1)) at x = n+3..n+8",
              "functional equation of P_n(n+1,x)",
              lambda n=n: tuple(ec.sgsp_eval(n, n + 1, x) for x in range(n + 3, n + 9)),
              lambda n=n: tuple(ec.functional_equation_rhs(n, x) for x in range(n + 3, n + 9)),
              params={"n": n}, kind="exact", group=g)
    for n in range(1, 6):
        b.add(f"{g}/central-value/n={n}",
              "P_(4n)(4n+1, 2n+1) = ((2n)!)^2",
              "central value of P_(4n)",
              lambda n=n: ec.sgsp_eval(4 * n, 4 * n + 1, 2 * n + 1),
              lambda n=n: Fraction(ec.factorial(2 * n) ** 2),
              params={"n": n}, kind="exact", group=g)
    for n in range(1, 4):
        b.add(f"{g}/double-sum/n={n}",
              "sum_k sum_r (-1)^r r^(4n-2k) P_(2k)(4n+1, 2n+1) = 0",
              "alternating double sum of P_(2k)",
              lambda n=n: ec.double_sum_identity(n), lambda: Fraction(0),
              params={"n": n}, kind="exact", group=g)
    for n in (1, 3, 5, 7, 9, 11):
        b.add(f"{g}/odd-product/n={n}",
              "prod (z^2 - (2k-1)^2/4) equals its P_(2k)(n-1, n/2) expansion",
              "half-integer product expansion",
              lambda n=n: tuple(ec.odd_product_identity(n)[0].coeffs),
              lambda n=n: tuple(ec.odd_product_identity(n)[1].coeffs),
              params={"n": n}, kind="exact", group=g)
    b.add(f"{g}/stirling-via-bell",
          "n!/r! B_r(H_n, -H_n^(2), ...) = [n+1, r+1] for n <= 20",
          "Stirling cycle numbers from Bell polynomials",
          lambda: tuple(ec.stirling_via_bell(n, r) for n in range(21) for r in range(n + 1)),
          lambda: tuple(Fraction(ec.stirling_cycle(n + 1, r + 1)) for n in range(21) for r in range(n + 1)),
          kind="exact", group=g)
    for m in (3, 6, 9):
        x = b.rational()
        b.add(f"{g}/bell-representation/m={m}",
              f"Bell-polynomial form of P_k(m,x) equals the cycle-number form, x={x}",
              "two representations of P_k(m,x)",
              lambda m=m, x=x: tuple(ec.sgsp_eval_bell(k, m, x) for k in range(m + 1)),
              lambda m=m, x=x: tuple(ec.sgsp_eval(k, m, x) for k in range(m + 1)),
              params={"m": m, "x": str(x)}, kind="exact", group=g)
    b.add(f"{g}/stirling-cycle/anchors",
          "[0 0], [4 2], [5 3]", "Stirling cycle numbers",
          lambda: (ec.stirling_cycle(0, 0), ec.stirling_cycle(4, 2), ec.stirling_cycle(5, 3)),
          lambda: (1, 11, 35), kind="exact", group=g)


# ---------------------------------------------------------------------------
# special-function relations


def _specfun(b: _Builder):
    g = "specfun"
    quarter, half, third = Fraction(1, 4), Fraction(1, 2), Fraction(1, 3)
    for n in (2, 3, 4):
        for x in (quarter, half, Fraction(3, 4), Fraction(1)):
            lhs, rhs = _pair(lambda n=n, x=x: sf.zeta_diff_polygamma(n, x))
            b.add(f"{g}/zeta-diff-polygamma/n={n},x={x}",
                  "zeta(n,x) - zeta(n,x+1/2) against the polygamma difference",
                  "zeta difference at positive integer order", lhs, rhs,
                  params={"n": n, "x": str(x)}, group=g)
    for n in range(7):
        for x in (quarter, Fraction(2, 3), b.rational()):
            lhs, rhs = _pair(lambda n=n, x=x: sf.zeta_diff_bernoulli(n, x))
            b.add(f"{g}/zeta-diff-bernoulli/n={n},x={x}",
                  "zeta(-n,x) - zeta(-n,x+1/2) against the exact Bernoulli difference",
                  "zeta difference at nonpositive order", lhs, (lambda rhs=rhs: ec_to_mpf(rhs())),
                  params={"n": n, "x": str(x)}, group=g)
    for x in (quarter, half, Fraction(1), Fraction(3, 2)):
        lhs, rhs = _pair(lambda x=x: sf.zeta_sderiv_diff_at_zero(x))
        b.add(f"{g}/zeta-sderiv-diff-zero/x={x}",
              "zeta'(0,x) - zeta'(0,x+1/2) against ln Gamma(x) - ln Gamma(x+1/2)",
              "zeta derivative difference at s = 0", lhs, rhs, params={"x": str(x)}, group=g)
    for a, bb in ((2, quarter), (3, third), (half, quarter), ("-3/2", third), ("1/1000", half), ("1.1", quarter)):
        lhs, rhs = _pair(lambda a=a, bb=bb: sf.zeta_diff_lerch(a, bb))
        b.add(f"{g}/zeta-diff-lerch/a={a},b={bb}",
              "zeta(a,b) - zeta(a,b+1/2) against 2^a Phi(-1,a,2b) by the alternating series",
              "zeta difference as a Lerch value", lhs, rhs, params={"a": str(a), "b": str(bb)}, group=g)
    for n in (1, 2, 3):
        for z in (quarter, third, half):
            lhs, rhs = _pair(lambda n=n, z=z: sf.zeta_sderiv_reflection(n, z))
            b.add(f"{g}/sderiv-reflection-real/n={n},z={z}",
                  "zeta'(-n,z) + (-1)^n zeta'(-n,1-z) against the polylogarithm reflection (real part)",
                  "reflection of zeta'(-n,z)", lhs, (lambda rhs=rhs: re(rhs())),
                  params={"n": n, "z": str(z)}, group=g)
            b.add(f"{g}/sderiv-reflection-imag/n={n},z={z}",
                  "imaginary part of the polylogarithm reflection vanishes",
                  "reflection of zeta'(-n,z)", (lambda rhs=rhs: im(rhs())), (lambda: mpf(0)),
                  params={"n": n, "z": str(z)}, tolerance="1e-20", group=g)
    for m, n in ((1, 2), (2, 2), (3, 3), (2, 1), (1, 1), (3, 1), (4, 2)):
        lhs, rhs = _pair(lambda m=m, n=n: sf.zeta_sderiv_diff_half_integers(m, n))
        b.add(f"{g}/sderiv-half-integers/m={m},n={n}",
              "zeta'(n,m/2) - zeta'(n,(m+1)/2) against its closed form",
              "zeta derivative difference at half integers", lhs, rhs, params={"m": m, "n": n}, group=g)
    lhs, rhs = _pair(lambda: sf.zeta_sderiv_diff_half_integers(2, 2, printed=True))
    b.add("discrepancy/sderiv-half-integers-printed/m=2,n=2",
          "printed sign placement on the zeta(n) term, even m", "zeta derivative difference at half integers",
          lhs, rhs, params={"m": 2, "n": 2}, group=g, tags=(QUARANTINE_TAG,))
    for s in (-3, -1, "0.5", 2, 5):
        for a in (quarter, half, 1, 2):
            b.add(f"{g}/hurwitz-dual-path/s={s},a={a}",
                  "Euler-Maclaurin zeta(s,a) against the Hermite integral",
                  "Hermite representation of zeta(s,a)",
                  lambda s=s, a=a: sf.hurwitz_zeta(s, a), lambda s=s, a=a: sf.hurwitz_zeta_hermite(s, a),
                  params={"s": str(s), "a": str(a)}, tolerance=b.hermite, group=g)
    b.add(f"{g}/hurwitz/anchors", "zeta(2,1), zeta(-1,1), zeta'(0,1)", "Hurwitz zeta special values",
          lambda: (sf.hurwitz_zeta(2, 1) - pi ** 2 / 6) ** 2 + (sf.hurwitz_zeta(-1, 1) + mpf(1) / 12) ** 2
          + (sf.hurwitz_zeta_sderiv(0, 1) + log(2 * pi) / 2) ** 2,
          lambda: mpf(0), group=g)
    lhs, rhs = _pair(sf.beta_deriv_zero_reflection)
    b.add(f"{g}/beta-deriv-zero/reflection", "beta'(0) against the differentiated reflection formula",
          "beta'(0) reflection chain", lhs, rhs, group=g)
    lhs, rhs = _pair(sf.beta_deriv_zero_closed_form)
    b.add(f"{g}/beta-deriv-zero/closed-form", "beta'(0) against -ln(2 Gamma(3/4)/Gamma(1/4))",
          "beta'(0) closed form", lhs, rhs, group=g)
    lhs, rhs = _pair(lambda: sf.beta_deriv_zero_closed_form(printed=True))
    b.add("discrepancy/beta-deriv-zero-printed", "beta'(0) against the doubled closed form",
          "beta'(0) closed form", lhs, rhs, group=g, tags=(QUARANTINE_TAG,))
    for s in ("-1/2", -2, "-3/2"):
        b.add(f"{g}/beta-integral/s={s}",
              "beta(s) by quadrature of x^(-s) sech x with prefactor (2/pi)^(1-s), against dirichlet_beta",
              "integral continuation of beta(s)",
              lambda s=s: sf.beta_via_integral(s), lambda s=s: sf.dirichlet_beta(s),
              params={"s": str(s)}, tolerance=b.hermite, group=g)
    b.add("discrepancy/beta-integral-printed-exponent/s=-1/2",
          "beta(s) by quadrature with prefactor (2/pi)^(1/s)", "integral continuation of beta(s)",
          lambda: sf.beta_via_integral("-1/2", printed_exponent=True), lambda: sf.dirichlet_beta("-1/2"),
          params={"s": "-1/2"}, tolerance=b.oracle, group=g, tags=(QUARANTINE_TAG,))
    b.add(f"{g}/beta/anchors", "beta(2) = G, beta(0) = 1/2, beta(-2) = -1/2", "Dirichlet beta special values",
          lambda: (sf.dirichlet_beta(2), sf.dirichlet_beta(0), sf.dirichlet_beta(-2)),
          lambda: (sf.catalan(), mpf(1) / 2, -mpf(1) / 2), group=g)
    b.add(f"{g}/limit-s1/beta-route",
          "lim_{s->1}[zeta'(s,1/4) - zeta'(s,3/4)] against pi ln 4 + 4 beta'(1)",
          "s -> 1 limit of the zeta derivative difference",
          lambda: sf.zeta_sderiv_diff_limit_s1(quarter), lambda: pi * log(4) + 4 * sf.dirichlet_beta_deriv(1),
          group=g)
    for order, t in ((2, quarter), (3, third), (4, Fraction(2, 5)), (2, Fraction(5, 7))):
        b.add(f"{g}/polylog-dual-path/n={order},t={t}",
              "Li_n(e^(2 pi i t)) by the expansion about 1 against the Hurwitz finite sum",
              "polylogarithm on the unit circle",
              lambda order=order, t=t: abs(sf.polylog_unit_circle(order, t) - sf.polylog_unit_circle_rational(order, t)),
              lambda: mpf(0), params={"n": order, "t": str(t)}, group=g)
    b.add(f"{g}/polylog/anchor", "Li_2(i) = -pi^2/48 + iG", "polylogarithm on the unit circle",
          lambda: abs(sf.polylog_unit_circle(2, quarter) - mp.mpc(-pi ** 2 / 48, sf.catalan())),
          lambda: mpf(0), group=g)


def ec_to_mpf(v):
    if isinstance(v, Fraction):
        return mpf(v.numerator) / v.denominator
    return v


# ---------------------------------------------------------------------------
# closed forms


def _closedform(b: _Builder):
    g = "closedform"
    for n in range(1, 7):
        b.add(f"{g}/Delta-general-vs-table/n={n}", "general Delta_n(1,1) against the explicit constant table",
              "Delta_n general formula", lambda n=n: cf.delta_general(n), lambda n=n: cf.delta_table(n),
              params={"n": n}, group=g)
        b.add(f"{g}/Delta-general-vs-oracle/n={n}", "general Delta_n(1,1) against int ln x sech^n x",
              "Delta_n general formula", lambda n=n: cf.delta_general(n),
              _oracle(lambda n=n: oracle_sequence("Delta", n, tol=b.qtol)),
              params={"n": n}, tolerance=b.oracle, group=g)
    for a, bb in ((2, 1), (1, 2), (3, 5), (2, 3)):
        b.add(f"{g}/Delta-scaling/n=3,a={a},b={bb}", "Delta_3(a,b) against int ln(ax) sech^3(bx)",
              "Delta_n scaling in a and b", lambda a=a, bb=bb: cf.delta_general(3, a, bb),
              _oracle(lambda a=a, bb=bb: oracle_sequence("Delta", 3, "hyperbolic", a, bb, tol=b.qtol)),
              params={"n": 3, "a": a, "b": bb}, tolerance=b.oracle, group=g)
    b.add(f"{g}/Delta2-table/a=2,b=3", "Delta_2(2,3) from -gamma/b + ln(a pi/(4b))/b against the integral",
          "Delta_2 explicit form", lambda: cf.delta_table(2, 2, 3),
          _oracle(lambda: oracle_sequence("Delta", 2, "hyperbolic", 2, 3, tol=b.qtol)),
          params={"a": 2, "b": 3}, tolerance=b.oracle, group=g)
    b.add("discrepancy/Delta2-table-printed/a=2,b=3", "Delta_2(2,3) from -gamma/a + ln(b pi/(4a))/a against the integral",
          "Delta_2 explicit form", lambda: cf.delta_table_printed(2, 2, 3),
          _oracle(lambda: oracle_sequence("Delta", 2, "hyperbolic", 2, 3, tol=b.qtol)),
          params={"a": 2, "b": 3}, tolerance=b.oracle, group=g, tags=(QUARANTINE_TAG,))
    b.add(f"{g}/Delta1-beta-chain", "Delta_1 from beta'(1) against the general formula",
          "Delta_1 through beta'(1)", lambda: cf.delta1_beta_chain(), lambda: cf.delta_general(1), group=g)
    b.add(f"{g}/Delta1-beta-chain/a=2,b=3", "Delta_1(2,3) from beta'(1) against the general formula",
          "Delta_1 through beta'(1)", lambda: cf.delta1_beta_chain(2, 3), lambda: cf.delta_general(1, 2, 3), group=g)
    lhs, rhs = _pair(cf.zeta_limit_quarter)
    b.add(f"{g}/limit-quarter", "lim_{s->1}[zeta'(s,1/4) - zeta'(s,3/4)] against 2 Delta_1 + pi(gamma + ln 4)",
          "s -> 1 limit at x = 1/4", lhs, rhs, group=g)
    seqs = {
        "chi": (cf.chi_closed, cf.chi_table),
        "lambda": (cf.lambda_closed, cf.lambda_table),
        "delta": (cf.delta_seq_closed, cf.delta_seq_table),
    }
    for name, (closed, table) in seqs.items():
        for n in range(1, 7):
            b.add(f"{g}/{name}-closed-vs-table/n={n}", f"{name}_n closed form against the explicit constant table",
                  f"{name}_n closed form", lambda closed=closed, n=n: closed(n), lambda table=table, n=n: table(n),
                  params={"n": n}, group=g)
            b.add(f"{g}/{name}-closed-vs-oracle/n={n}", f"{name}_n closed form against its defining integral",
                  f"{name}_n closed form", lambda closed=closed, n=n: closed(n),
                  _oracle(lambda name=name, n=n: oracle_sequence(name, n, tol=b.qtol)),
                  params={"n": n}, tolerance=b.oracle, group=g)
    for n in range(1, 9):
        b.add(f"{g}/chi-parity/n={n}", "parity-split chi_n against the general chi_n",
              "chi_n parity forms", lambda n=n: cf.chi_parity(n), lambda n=n: cf.chi_closed(n),
              params={"n": n}, group=g)
        b.add(f"{g}/lambda-parity/n={n}", "parity-split lambda_n against the general lambda_n",
              "lambda_n parity forms", lambda n=n: cf.lambda_parity(n), lambda n=n: cf.lambda_closed(n),
              params={"n": n}, group=g)
    b.add("discrepancy/chi-parity-printed/n=4", "even chi_n with the printed sign of the first sum",
          "chi_n parity forms", lambda: cf.chi_parity(4, printed=True),
          _oracle(lambda: oracle_sequence("chi", 4, tol=b.qtol)),
          params={"n": 4}, tolerance=b.oracle, group=g, tags=(QUARANTINE_TAG,))
    b.add("discrepancy/lambda-parity-printed/n=4", "even lambda_n with the printed sign of the first sum",
          "lambda_n parity forms", lambda: cf.lambda_parity(4, printed=True),
          _oracle(lambda: oracle_sequence("lambda", 4, tol=b.qtol)),
          params={"n": 4}, tolerance=b.oracle, group=g, tags=(QUARANTINE_TAG,))
    for n in range(1, 7):
        b.add(f"{g}/delta-direct/n={n}", "four-sum delta_n against chi_(n+1) - chi_n",
              "delta_n direct formula", lambda n=n: cf.delta_seq_direct(n), lambda n=n: cf.delta_seq_closed(n),
              params={"n": n}, group=g)
    for n in range(2, 9):
        b.add(f"{g}/chi-telescoping/n={n}", "sum_{k<n} delta_k (four-sum form) against chi_n",
              "chi_n as a sum of delta_k",
              lambda n=n: sum((cf.delta_seq_direct(k) for k in range(1, n)), mpf(0)),
              lambda n=n: cf.chi_closed(n), params={"n": n}, group=g)
    for n in range(3, 9):
        for i, path in enumerate(("lambda", "chi")):
            b.add(f"{g}/Delta-recurrence-{path}/n={n}", f"Delta_n from Delta_(n-2) and {path}_(n-2)",
                  "Delta_n recurrence", lambda n=n, i=i: cf.delta_recurrence(n)[i], lambda n=n: cf.delta_general(n),
                  params={"n": n}, group=g)
    for n in range(2, 7):
        b.add(f"{g}/lambda-recurrence/n={n}", "lambda_n = delta_(n-1)/n + (n-1) lambda_(n-1)/n (direct delta)",
              "lambda_n recurrence",
              lambda n=n: cf.delta_seq_direct(n - 1) / n + mpf(n - 1) / n * cf.lambda_parity(n - 1),
              lambda n=n: cf.lambda_parity(n), params={"n": n}, group=g)
    for n in range(1, 9):
        lhs, rhs = _pair(lambda n=n: cf.cojer_identity(n))
        b.add(f"{g}/stirling-zeta-sum/n={n}", "Stirling-weighted zeta-difference sum against 2^(1-n) Gamma(n/2)^2",
              "Stirling-weighted zeta sum", lhs, rhs, params={"n": n}, group=g)
        b.add(f"{g}/stirling-zeta-combination/n={n}", "n^2/16 S_n - S_(n+2) vanishes",
              "Stirling-weighted zeta sum", lambda n=n: cf.stirling_zeta_combination(n), lambda: mpf(0),
              params={"n": n}, group=g)
    for m, n, p in ((1, 2, 1), (2, 2, 1), (3, 3, 2), (2, 3, 1), (4, 5, 3)):
        lhs, rhs = _pair(lambda m=m, n=n, p=p: cf.hurwitz_sgsp_general(m, n, p))
        b.add(f"{g}/two-term-stirling-zeta/m={m},n={n},p={p}",
              "two-term Stirling/Hurwitz sum against 2^(1-m) Gamma(p/n) Gamma(m+1-p/n)",
              "two-term Stirling-weighted zeta sum", lhs, rhs, params={"m": m, "n": n, "p": p}, group=g)
    b.add(f"{g}/nested-chi-sum/single", "sum_{k=1}^{2} chi_k against the chi_2 integral",
          "nested sums of chi_k", lambda: cf.chi_family_nested_sum([1], 2),
          _oracle(lambda: oracle_sequence("chi", 2, tol=b.qtol)), tolerance=b.oracle, group=g)
    b.add(f"{g}/nested-chi-sum/double", "sum_{k2=1}^{3} sum_{k1=1}^{k2} chi_k1 against 2 chi_2 + chi_3 integrals",
          "nested sums of chi_k", lambda: cf.chi_family_nested_sum([1, 1], 3),
          _oracle(lambda: _combine(2, oracle_sequence("chi", 2, tol=b.qtol), 1, oracle_sequence("chi", 3, tol=b.qtol))),
          tolerance=b.oracle, group=g)


def _combine(ca, ra, cb, rb):
    from ..quadrature import QuadResult

    return QuadResult(ca * ra.value + cb * rb.value, ca * ra.error_estimate + cb * rb.error_estimate,
                      ra.evaluations + rb.evaluations, ra.converged and rb.converged)


# ---------------------------------------------------------------------------
# named integrals and form equivalence


def _quadrature(b: _Builder):
    g = "quadrature"
    half, quarter = Fraction(1, 2), Fraction(1, 4)
    tol = b.oracle
    grid = [(a, y) for a in (half, 1, "pi") for y in (quarter, half, 1, "pi")]

    def val(v):
        return +pi if v == "pi" else v

    for a, y in grid:
        p = {"a": str(a), "y": str(y)}
        entries = [
            ("tanh_rational_eq31", "tanh(at)(1/t - t/(t^2+y^2))", lambda a, y: cf.tanh_rational_general("eq31", a, y)),
            ("tanh_rational_eq32", "t/(t^2+y^2)(1 - tanh(at))", lambda a, y: cf.tanh_rational_general("eq32", a, y)),
            ("tanh_rational_eq34", "tanh(at)/t - t/(t^2+y^2)", lambda a, y: cf.tanh_rational_general("eq34", a, y)),
            ("youpart", "(1 - tanh(at)) arctan(|y|/t)", lambda a, y: cf.arctan_tanh_integrals("youpart", a, y)),
            ("younko", "ln(e^(at) sech(at))/(t^2+y^2)", lambda a, y: cf.arctan_tanh_integrals("younko", a, y)),
            ("sech2_log", "ln(t^2+y^2) sech^2(at)", lambda a, y: cf.sech2_log_integral(a, y)),
        ] + [
            (f"gamma_rep_{r}", f"gamma representation {r}", lambda a, y, r=r: cf.gamma_representation(r, a, y))
            for r in range(1, 6)
        ]
        for name, what, closed in entries:
            b.add(f"{g}/{name}/a={a},y={y}", f"closed form of int_0^inf {what} dt against quadrature",
                  "tanh and arctan integral family",
                  lambda closed=closed, a=a, y=y: closed(val(a), val(y)),
                  _oracle(lambda name=name, a=a, y=y: oracle_named(name, {"a": val(a), "y": val(y)}, tol=b.qtol)),
                  params=p, tolerance=tol, group=g)
    for y in (quarter, half, 1, "pi"):
        for k in ("kappa", "kappa1", "kappa2"):
            b.add(f"{g}/{k}/y={y}", f"{k}(y) closed form against its integral", "kappa family",
                  lambda k=k, y=y: cf.kappa_family(k, val(y)),
                  _oracle(lambda k=k, y=y: oracle_named(k, {"y": val(y)}, tol=b.qtol)),
                  params={"y": str(y)}, tolerance=tol, group=g)
    for k in ("kappa1", "kappa2"):
        b.add(f"{g}/{k}/y=0", f"{k}(0)", "kappa family", lambda: None, lambda: None,
              params={"y": "0"}, group=g, skip_reason=f"{k}(y) is undefined at y = 0")
    for rep, a, y in ((1, 1, "pi"), (2, 1, "pi"), (3, "pi", quarter), (4, "pi", quarter), (5, "pi", quarter)):
        b.add(f"{g}/euler-gamma-from-integral/rep={rep},a={a},y={y}",
              f"Euler's gamma recovered from the integral of representation {rep}",
              "integral representations of Euler's gamma",
              lambda rep=rep, a=a, y=y: cf.gamma_from_representation(
                  rep, val(a), val(y),
                  oracle_named(f"gamma_rep_{rep}", {"a": val(a), "y": val(y)}, tol=b.qtol).require().value),
              lambda: sf.euler_gamma(), params={"rep": rep, "a": str(a), "y": str(y)}, tolerance=tol, group=g)
    b.add(f"{g}/ln2-from-integral", "ln 2 = 1 - int ln(e^t sech t)/(t^2+pi^2) dt", "integral representation of ln 2",
          lambda: cf.ln2_from_integral(oracle_named("ln2_repr", tol=b.qtol).require().value),
          lambda: log(2), tolerance=tol, group=g)
    b.add(f"{g}/pi-from-integral", "pi = int (1 - tanh t) arctan(pi/t) dt / (1 - ln 2)", "integral representation of pi",
          lambda: cf.pi_from_integral(oracle_named("pi_repr", tol=b.qtol).require().value),
          lambda: +pi, tolerance=tol, group=g)
    for tau in (half, 1, 2):
        b.add(f"{g}/cosine-sech/tau={tau}", "int cos(tau x) sech x dx against (pi/2) sech(pi tau/2)",
              "cosine transform of sech", lambda tau=tau: (pi / 2) * sech(pi * ec_to_mpf(Fraction(tau)) / 2),
              _oracle(lambda tau=tau: oracle_named("cosine_sech", {"tau": tau}, tol=b.qtol)),
              params={"tau": str(tau)}, tolerance=tol, group=g)
    b.add(f"{g}/valean/y=1", "int tanh(pi x/2)(1/x - x/(x^2+1)) dx against 2 ln 2", "tanh-rational integral at y = 1",
          lambda: 2 * log(2), _oracle(lambda: oracle_named("valean_2b", {"y": 1}, tol=b.qtol)),
          tolerance=tol, group=g)
    for a, bb in ((0, 1), (1, "pi"), (-1, 2), ("1/3", "1/2")):
        b.add(f"{g}/log-quadratic-sech/a={a},b={bb}", "int ln(x^2+a^2) sech(bx) dx against its Gamma closed form",
              "log-quadratic sech integral",
              lambda a=a, bb=bb: cf.malmsten_log_quadratic(val(a) if a != "1/3" else a, val(bb) if bb != "1/2" else bb),
              _oracle(lambda a=a, bb=bb: oracle_named("log_quadratic_sech", {"a": val(a), "b": val(bb)}, tol=b.qtol)),
              params={"a": str(a), "b": str(bb)}, tolerance=tol, group=g)
    b.add(f"{g}/log-quadratic-sech/a=0-vs-Delta1", "int ln(x^2) sech x dx against 2 Delta_1", "log-quadratic sech integral",
          lambda: 2 * cf.delta_general(1), lambda: cf.malmsten_log_quadratic(0, 1), group=g)
    for n in range(1, 7):
        b.add(f"{g}/sech-power/n={n}", "int sech^n x dx against 2^(n-2) Gamma(n/2)^2/(n-1)!", "sech power integral",
              lambda n=n: cf.sech_power_integral(n),
              _oracle(lambda n=n: oracle_named("sech_power", {"n": n}, tol=b.qtol)),
              params={"n": n}, tolerance=tol, group=g)
        b.add(f"{g}/rational-power/n={n}", "int_0^1 x^(n-1)/(1+x^2)^n dx against Gamma(n/2)^2/(4 (n-1)!)",
              "rational power integral", lambda n=n: cf.sech_power_integral(n) / 2 ** n,
              _oracle(lambda n=n: oracle_named("rational_power", {"n": n}, tol=b.qtol)),
              params={"n": n}, tolerance=tol, group=g)
    for name in SEQUENCES:
        for n in range(1, 5):
            for form in FORMS[1:]:
                b.add(f"{g}/form-equivalence/{name}/n={n}/{form}",
                      f"{name}_n integrated in the {form} form against the hyperbolic form",
                      "equivalent integral forms",
                      _oracle(lambda name=name, n=n, form=form: oracle_sequence(name, n, form, tol=b.qtol)),
                      _oracle(lambda name=name, n=n: oracle_sequence(name, n, "hyperbolic", tol=b.qtol)),
                      params={"n": n, "form": form}, tolerance=tol, group=g)


# ---------------------------------------------------------------------------
# double-integral reductions


def _reduction(b: _Builder):
    g = "reduction"
    for n in (1, 2, 3):
        b.add(f"{g}/delta-double-integral/n={n}", "delta_n as a double integral over the unit square",
              "delta_n reduction to a double integral",
              _oracle(lambda n=n: cf.delta_seq_reduction_2d(n)), lambda n=n: cf.delta_seq_closed(n),
              params={"n": n}, tolerance="1e-6", group=g)
    for n in (4, 5):
        b.add(f"{g}/Delta-double-integral/n={n}", "Delta_n from Delta_(n-2) and a double integral",
              "Delta_n reduction formula", lambda n=n: cf.delta_n_reduction_2d(n), lambda n=n: cf.delta_general(n),
              params={"n": n}, tolerance="1e-6", group=g)
    b.add("discrepancy/Delta-double-integral-printed/n=4",
          "Delta_4 reduction without the 2^k factor on the digamma term", "Delta_n reduction formula",
          lambda: cf.delta_n_reduction_2d(4, printed=True), lambda: cf.delta_general(4),
          params={"n": 4}, tolerance="1e-6", group=g, tags=(QUARANTINE_TAG,))


def build_default_suite(precision: int = 30, seed: int = 0, tol=None) -> list[IdentityCase]:
    """Build the full, deterministic list of identity cases.

    Parameters
    ----------
    precision : int
        Target digits ``P`` the suite will run at; sets the tight tolerance
        ``10^-(P-10)`` for closed form against closed form.
    seed : int
        Seed for the random rational parameters.
    tol : decimal, optional
        Quadrature tolerance.  Closed form against oracle cases use
        ``max(10 tol, 1e-12)``.  Defaults to ``1e-12``.
    """
    if precision < 15:
        raise DomainError("precision must be at least 15")
    b = _Builder(precision, seed, tol)
    _exact(b)
    _specfun(b)
    _closedform(b)
    _quadrature(b)
    _reduction(b)
    ids = [c.id for c in b.cases]
    if len(set(ids)) != len(ids):
        raise AssertionError("duplicate case ids")
    return b.cases
