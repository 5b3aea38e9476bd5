"""Execution of identity cases and the JSON report."""

from __future__ import annotations

import json
import multiprocessing
import time
import traceback
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import mpmath
from mpmath import mp, mpf, nstr

from ..context import precision as precision_ctx
from ..errors import DomainError
from .cases import IdentityCase

__all__ = ["run", "run_case", "report_to_json", "passes_gate"]

_CASES: list[IdentityCase] = []
_CONFIG: dict = {}


def _fmt(v, digits: int) -> str:
    if isinstance(v, (bool, type(None))):
        return str(v)
    if isinstance(v, (int, Fraction)):
        return str(v)
    if isinstance(v, (tuple, list)):
        if len(v) > 6:
            return "[" + ", ".join(_fmt(x, digits) for x in v[:6]) + f", ... ({len(v)} values)]"
        return "[" + ", ".join(_fmt(x, digits) for x in v) + "]"
    if isinstance(v, (mpmath.mpf, mpmath.mpc, float)):
        return nstr(v, digits, min_fixed=-5, max_fixed=5)
    return str(v)


def _real(v):
    if isinstance(v, Fraction):
        return mpf(v.numerator) / v.denominator
    if isinstance(v, mpmath.mpc):
        if v.imag != 0:
            raise DomainError("numeric cases compare real values")
        return v.real
    return mpf(v)


def _compare(case: IdentityCase, lhs, rhs, P: int):
    """Return ``(abs_err, rel_err, passed)`` for one evaluated case."""
    if case.kind == "exact":
        passed = lhs == rhs
        if isinstance(lhs, (tuple, list)):
            diffs = [abs(Fraction(x) - Fraction(y)) for x, y in zip(lhs, rhs)]
            err = max(diffs, default=Fraction(0))
            passed = passed and len(lhs) == len(rhs)
            scale = max((abs(Fraction(y)) for y in rhs), default=Fraction(0))
        else:
            err = abs(Fraction(lhs) - Fraction(rhs))
            scale = abs(Fraction(rhs))
        rel = err / scale if scale else err
        return err, rel, bool(passed)
    if isinstance(lhs, (tuple, list)):
        if len(lhs) != len(rhs):
            return mpmath.inf, mpmath.inf, False
        rows = [_compare_real(case, x, y, P) for x, y in zip(lhs, rhs)]
        worst = max(rows, key=lambda r: (not r[2], r[0]))
        return worst[0], max(r[1] for r in rows), all(r[2] for r in rows)
    return _compare_real(case, lhs, rhs, P)


def _compare_real(case: IdentityCase, lhs, rhs, P: int):
    a, b = _real(lhs), _real(rhs)
    if not (mpmath.isfinite(a) and mpmath.isfinite(b)):
        return mpmath.inf, mpmath.inf, False
    err = abs(a - b)
    scale = max(mpf(1), abs(b))
    tol = mpf(case.tolerance)
    floor = mpf(10) ** (-(P - 10))
    passed = err <= max(tol * scale, floor)
    rel = err / abs(b) if b != 0 else err
    return err, rel, bool(passed)


def run_case(case: IdentityCase, P: int) -> dict:
    """Evaluate one case at precision ``P`` and return its report row.

    Exceptions raised by either evaluator are recorded as failures.
    """
    row = {
        "id": case.id,
        "anchor": case.anchor,
        "lhs": "",
        "rhs": "",
        "abs_err": "",
        "rel_err": "",
        "tol": case.tolerance,
        "pass": False,
        "millis": 0,
        "status": "fail",
    }
    if case.quarantined:
        row["note"] = "quarantined: known-wrong printed variant, expected to fail"
    if case.skip_reason:
        row.update(status="skipped", note=case.skip_reason)
        return row
    t0 = time.perf_counter()
    try:
        with precision_ctx(P):
            lhs = case.lhs()
            rhs = case.rhs()
            err, rel, passed = _compare(case, lhs, rhs, P)
            row.update(
                lhs=_fmt(lhs, P),
                rhs=_fmt(rhs, P),
                abs_err=_fmt(err, 6),
                rel_err=_fmt(rel, 6),
                **{"pass": passed},
            )
            row["status"] = "pass" if passed else "fail"
    except Exception as exc:  # recorded per case, never aborts the suite
        row["note"] = f"{type(exc).__name__}: {exc}"
        row["traceback"] = traceback.format_exc(limit=3)
    row["millis"] = int(round((time.perf_counter() - t0) * 1000))
    return row


def _worker(i: int) -> dict:
    return run_case(_CASES[i], _CONFIG["precision"])


def run(cases: list[IdentityCase], parallelism: int = 1, precision: int = 30, seed: int = 0) -> dict:
    """Run ``cases`` and assemble a report.

    Parameters
    ----------
    cases : list of IdentityCase
        Must be nonempty.
    parallelism : int
        Number of worker processes.  ``1`` runs in-process.
    precision : int
        Target digits ``P`` for every evaluation.
    seed : int
        Recorded in the report; the cases already carry their parameters.

    Returns
    -------
    dict
        ``{"precision", "seed", "cases", "summary"}`` with rows sorted by id.
        ``summary.passed`` and ``summary.failed`` count non-quarantined cases
        only; quarantined cases are counted in ``summary.quarantined``.
    """
    if not cases:
        raise DomainError("run needs at least one case")
    if precision < 15:
        raise DomainError("precision must be at least 15")
    if parallelism > 1 and len(cases) > 1:
        global _CASES, _CONFIG
        _CASES, _CONFIG = list(cases), {"precision": precision}
        ctx = multiprocessing.get_context("fork")
        # Longest cases first keeps the pool busy at the end.
        order = sorted(range(len(cases)), key=lambda i: cases[i].group != "reduction")
        with ProcessPoolExecutor(max_workers=parallelism, mp_context=ctx) as pool:
            rows = list(pool.map(_worker, order))
        _CASES, _CONFIG = [], {}
    else:
        rows = [run_case(c, precision) for c in cases]
    rows.sort(key=lambda r: r["id"])
    quarantined = {c.id for c in cases if c.quarantined}
    gated = [r for r in rows if r["id"] not in quarantined and r["status"] != "skipped"]
    summary = {
        "total": len(rows),
        "passed": sum(r["pass"] for r in gated),
        "failed": sum(not r["pass"] for r in gated),
        "skipped": sum(r["status"] == "skipped" for r in rows),
        "quarantined": len(quarantined),
    }
    return {"precision": precision, "seed": seed, "cases": rows, "summary": summary}


def passes_gate(report: dict) -> bool:
    """True when every non-quarantined, non-skipped case passed."""
    return report["summary"]["failed"] == 0


def report_to_json(report: dict, *, timings: bool = True) -> str:
    """Serialize a report; ``timings=False`` zeroes ``millis`` for byte-stable output."""
    rows = []
    for r in report["cases"]:
        r = {k: v for k, v in r.items() if k != "traceback"}
        if not timings:
            r["millis"] = 0
        rows.append(r)
    return json.dumps({**report, "cases": rows}, indent=2)
