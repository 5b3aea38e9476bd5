"""Command-line interface.

::

    malmsten eval Delta --n 2
    malmsten quad Delta --n 1 --form lnln01
    malmsten table fex --max-n 6 --output csv
    malmsten poly sgsp --k 2 --m 2
    malmsten verify --prec 30 --tol 1e-10 --json report.json
    malmsten constants

Global options (``--prec``, ``--tol``, ``--output``, ``--seed``) may appear
before or after the subcommand.  ``MLM_PRECISION`` and ``MLM_TOL`` supply
defaults; flags take precedence.

Exit codes: 0 ok, 1 verification failure, 2 usage or domain error,
3 quadrature non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf, nstr

from . import closedform as cf
from . import exactcomb as ec
from .context import MIN_PRECISION, precision, to_real
from .errors import ConvergenceError, MalmstenError
from .quadrature import FORMS, list_integrands, oracle_named, oracle_sequence
from .specfun import CONSTANT_NAMES, constant

__all__ = ["CliConfig", "main", "build_parser"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NOCONV = 0, 1, 2, 3

DEFAULT_TOL = "1e-12"


class UsageError(Exception):
    """Bad flag values or environment settings."""


@dataclass(frozen=True)
class CliConfig:
    """Resolved global options."""

    precision: int = 40
    tolerance: str = DEFAULT_TOL
    output: str = "text"
    seed: int = 0


def _resolve_config(args) -> CliConfig:
    raw_p = args.prec if getattr(args, "prec", None) is not None else os.environ.get("MLM_PRECISION", "40")
    raw_t = args.tol if getattr(args, "tol", None) is not None else os.environ.get("MLM_TOL", DEFAULT_TOL)
    try:
        P = int(raw_p)
    except ValueError:
        raise UsageError(f"precision must be an integer, got {raw_p!r}")
    if P < MIN_PRECISION:
        raise UsageError(f"precision must be at least {MIN_PRECISION}, got {P}")
    try:
        tol = Fraction(str(raw_t).strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"tolerance must be a decimal number, got {raw_t!r}")
    if tol < Fraction(1, 10 ** (P - 2)):
        raise UsageError(f"tolerance {raw_t} is below 10^(2-P) = 1e-{P - 2}")
    return CliConfig(P, str(raw_t).strip(), getattr(args, "output", None) or "text", getattr(args, "seed", None) or 0)


# ---------------------------------------------------------------------------
# output


def _num(v, P: int) -> str:
    """``P`` significant digits; magnitudes below ``10^-P`` print as zero.

    Every quantity printed is of order one, so anything smaller is the
    rounding residue of an exact cancellation (``chi_1`` for instance).
    """
    if isinstance(v, (int, Fraction)):
        return str(v)
    if abs(v) < mpf(10) ** (-P):
        return "0"
    return nstr(v, P)


def _emit(cfg: CliConfig, record: dict | None = None, rows: list[dict] | None = None, out=None):
    """Write a single record or a list of rows in the configured format."""
    out = out or sys.stdout
    if cfg.output == "json":
        out.write(json.dumps(record if rows is None else rows, indent=2) + "\n")
    elif cfg.output == "csv":
        data = [record] if rows is None else rows
        if data:
            w = csv.DictWriter(out, fieldnames=list(data[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(data)
    else:
        if rows is None:
            width = max(map(len, record))
            for k, v in record.items():
                out.write(f"{k:<{width}}  {v}\n")
        elif rows:
            keys = list(rows[0])
            widths = {k: max(len(k), *(len(str(r[k])) for r in rows)) for k in keys}
            out.write("  ".join(f"{k:<{widths[k]}}" for k in keys).rstrip() + "\n")
            for r in rows:
                out.write("  ".join(f"{str(r[k]):<{widths[k]}}" for k in keys).rstrip() + "\n")


# ---------------------------------------------------------------------------
# commands

_EVAL = {
    "Delta": (cf.delta_general, "ln-sech integral Delta_n(a,b): finite sum of Hurwitz zeta differences"),
    "lambda": (cf.lambda_closed, "lambda_n: finite sum of Hurwitz zeta differences"),
    "chi": (cf.chi_closed, "chi_n: finite sum of Hurwitz zeta differences"),
    "delta_seq": (cf.delta_seq_closed, "delta_n = chi_(n+1) - chi_n"),
}
_EVAL_ALIASES = {"delta": "Delta", "malmsten": "Delta", "Lambda": "lambda"}


def cmd_eval(args, cfg: CliConfig) -> int:
    name = _EVAL_ALIASES.get(args.sequence, args.sequence)
    fn, provenance = _EVAL[name]
    with precision(cfg.precision):
        if name == "Delta":
            v = fn(args.n, to_real(args.a), to_real(args.b))
        else:
            if args.a != "1" or args.b != "1":
                raise UsageError("--a and --b apply only to Delta")
            v = fn(args.n)
        rec = {
            "sequence": name,
            "n": args.n,
            "a": args.a,
            "b": args.b,
            "value": _num(v, cfg.precision),
            "provenance": provenance,
            "precision": cfg.precision,
        }
    _emit(cfg, rec)
    return EXIT_OK


_QUAD_PARAMS = ("n", "a", "b", "y", "tau")
_SEQ_ALIASES = {"malmsten": "Delta", "delta_seq": "delta"}


def _quad_one(name: str, params: dict, form: str, tol):
    name = _SEQ_ALIASES.get(name, name)
    if name in ("Delta", "lambda", "delta", "chi"):
        if "n" not in params:
            raise UsageError(f"{name} needs --n")
        extra = set(params) - ({"n", "a", "b"} if name == "Delta" else {"n"})
        if extra:
            raise UsageError(f"unexpected parameters for {name}: {sorted(extra)}")
        return oracle_sequence(name, int(params["n"]), form, params.get("a", 1), params.get("b", 1), tol=tol)
    if form != "hyperbolic":
        raise UsageError(f"--form applies only to the four sequences, not {name}")
    if "n" in params:
        params = {**params, "n": int(params["n"])}
    return oracle_named(name, params, tol=tol)


def cmd_quad(args, cfg: CliConfig) -> int:
    if args.list_integrands:
        rows = [{"name": n, "integral": f, "params": " ".join(p)} for n, f, p in list_integrands()]
        _emit(cfg, rows=rows)
        return EXIT_OK
    if not args.integrand:
        raise UsageError("quad needs an integrand name (see --list-integrands)")
    raw = {k: getattr(args, k) for k in _QUAD_PARAMS if getattr(args, k) is not None}
    with precision(cfg.precision):
        params = {k: (v if k == "n" else _param(v)) for k, v in raw.items()}
        r = _quad_one(args.integrand, params, args.form, cfg.tolerance)
        rec = {
            "integrand": args.integrand,
            "form": args.form,
            "params": {k: str(v) for k, v in raw.items()},
            "value": _num(r.value, cfg.precision),
            "error_estimate": nstr(r.error_estimate, 6),
            "evaluations": r.evaluations,
            "converged": r.converged,
            "precision": cfg.precision,
            "tolerance": cfg.tolerance,
        }
    if cfg.output != "json":
        rec["params"] = " ".join(f"{k}={v}" for k, v in rec["params"].items())
    _emit(cfg, rec)
    return EXIT_OK if r.converged else EXIT_NOCONV


def _param(v: str):
    """Decimal string, fraction or the symbol ``pi``."""
    s = v.strip()
    if s in ("pi", "+pi"):
        return +mp.pi
    if s == "-pi":
        return -mp.pi
    return to_real(s)


def _table_rows(which: str, max_n: int, cfg: CliConfig):
    oracle_tol = max(10 * Fraction(cfg.tolerance), Fraction(1, 10**12))
    rows, ok = [], True

    def row(label, closed, oracle_name, n, a=1, b=1, footnote=False):
        nonlocal ok
        q = oracle_sequence(oracle_name, n, "hyperbolic", a, b, tol=cfg.tolerance).require().value
        diff = abs(closed - q)
        if not footnote and diff > to_real(oracle_tol) * max(1, abs(q)):
            ok = False
        rows.append({
            "quantity": label,
            "closed_form": _num(closed, cfg.precision),
            "oracle": _num(q, cfg.precision),
            "abs_diff": nstr(diff, 3),
        })

    if which == "fex":
        for name, table, oname in (("chi", cf.chi_table, "chi"), ("delta", cf.delta_seq_table, "delta"),
                                   ("lambda", cf.lambda_table, "lambda")):
            for n in range(1, max_n + 1):
                row(f"{name}_{n}", table(n), oname, n)
    else:
        for n in range(1, max_n + 1):
            row(f"Delta_{n}", cf.delta_table(n), "Delta", n)
        if max_n >= 2:
            # a = b hides the transposition, so the footnote uses a = 2, b = 3
            row("footnote: Delta_2(2,3) as printed, a and b transposed", cf.delta_table_printed(2, 2, 3), "Delta", 2, 2, 3,
                footnote=True)
    return rows, ok


def cmd_table(args, cfg: CliConfig) -> int:
    if not 1 <= args.max_n <= 6:
        raise UsageError("--max-n must be between 1 and 6")
    with precision(cfg.precision):
        rows, ok = _table_rows(args.which, args.max_n, cfg)
    _emit(cfg, rows=rows)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_poly(args, cfg: CliConfig) -> int:
    if args.kind == "sgsp":
        if args.m is None:
            raise UsageError("poly sgsp needs --m")
        p, var, asc, idx = ec.sgsp_poly(args.k, args.m), "x", False, {"m": args.m}
    else:
        if args.n is None:
            raise UsageError("poly gsp needs --n")
        p, var, asc, idx = ec.gsp_poly(args.k, args.n), "z", True, {"n": args.n}
    rec = {"kind": args.kind, "k": args.k, **idx, "polynomial": p.format(var, ascending=asc),
           "coefficients": [str(c) for c in p.coeffs]}
    if cfg.output == "text":
        sys.stdout.write(rec["polynomial"] + "\n")
    else:
        if cfg.output == "csv":
            rec["coefficients"] = " ".join(rec["coefficients"])
        _emit(cfg, rec)
    return EXIT_OK


def cmd_verify(args, cfg: CliConfig) -> int:
    from .verify import GROUPS, QUARANTINE_TAG, build_default_suite, passes_gate, report_to_json, run

    cases = build_default_suite(cfg.precision, cfg.seed, tol=cfg.tolerance)
    if args.only:
        groups = {g for item in args.only for g in item.split(",")}
        bad = groups - set(GROUPS) - {QUARANTINE_TAG}
        if bad:
            raise UsageError(f"unknown groups {sorted(bad)}; choose from {', '.join(GROUPS + (QUARANTINE_TAG,))}")
        cases = [c for c in cases if c.group in groups or (QUARANTINE_TAG in groups and c.quarantined)]
    if args.match:
        cases = [c for c in cases if args.match in c.id]
    if not cases:
        raise UsageError("the filters select no cases")
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    report = run(cases, parallelism=max(1, jobs), precision=cfg.precision, seed=cfg.seed)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report_to_json(report) + "\n")
    s = report["summary"]
    if cfg.output == "json":
        sys.stdout.write(report_to_json(report) + "\n")
    elif cfg.output == "csv":
        keys = ["id", "anchor", "status", "abs_err", "tol", "millis"]
        _emit(cfg, rows=[{k: r.get(k, "") for k in keys} for r in report["cases"]])
    else:
        for r in report["cases"]:
            if r["status"] == "pass" and not args.verbose:
                continue
            tag = r["status"].upper()
            if r["id"].startswith(QUARANTINE_TAG + "/"):
                tag = "QUARANTINED-" + tag
            line = f"{tag:<18} {r['id']}  err={r['abs_err']}  tol={r['tol']}  [{r['anchor']}]"
            if r.get("note") and r["status"] != "pass":
                line += f"  {r['note']}"
            print(line)
        print(f"total={s['total']} passed={s['passed']} failed={s['failed']} "
              f"skipped={s['skipped']} quarantined={s['quarantined']}")
    return EXIT_OK if passes_gate(report) else EXIT_FAIL


def cmd_constants(args, cfg: CliConfig) -> int:
    names = args.names or list(CONSTANT_NAMES)
    unknown = [n for n in names if n not in CONSTANT_NAMES and not n.startswith(("zeta", "psi"))]
    if unknown:
        raise UsageError(f"unknown constants {unknown}; known: {', '.join(CONSTANT_NAMES)}")
    with precision(cfg.precision):
        rows = [{"name": n, "value": _num(constant(n), cfg.precision)} for n in names]
    _emit(cfg, rows=rows)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _global_options(parser, suppress: bool):
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument("--prec", type=str, default=d, help="target correct digits (default 40, env MLM_PRECISION)")
    parser.add_argument("--tol", type=str, default=d, help="quadrature tolerance (default 1e-12, env MLM_TOL)")
    parser.add_argument("--output", choices=("text", "json", "csv"), default=d, help="output format")
    parser.add_argument("--seed", type=int, default=d, help="seed for random rational parameters in verify")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="malmsten",
        description="High-precision closed forms, quadrature oracles and identity checks "
        "for logarithmic-hyperbolic integrals.",
    )
    _global_options(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help):
        sp = sub.add_parser(name, help=help, description=help)
        _global_options(sp, suppress=True)
        return sp

    e = add("eval", "evaluate a closed form")
    e.add_argument("sequence", choices=sorted(set(_EVAL) | set(_EVAL_ALIASES)),
                   help="Delta (alias delta) for int ln(ax) sech^n(bx); lambda; chi; delta_seq")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--a", default="1")
    e.add_argument("--b", default="1")
    e.set_defaults(func=cmd_eval)

    q = add("quad", "integrate a catalogued integrand numerically")
    q.add_argument("integrand", nargs="?")
    q.add_argument("--form", choices=FORMS, default="hyperbolic")
    q.add_argument("--list-integrands", action="store_true")
    q.add_argument("--n", type=int)
    for k in ("a", "b", "y", "tau"):
        q.add_argument(f"--{k}")
    q.set_defaults(func=cmd_quad)

    t = add("table", "closed form against oracle for the tables of constants")
    t.add_argument("which", choices=("scex", "fex"), help="scex: Delta_n; fex: chi_n, delta_n, lambda_n")
    t.add_argument("--max-n", type=int, default=6)
    t.set_defaults(func=cmd_table)

    po = add("poly", "print a Stirling polynomial with exact coefficients")
    po.add_argument("kind", choices=("sgsp", "gsp"))
    po.add_argument("--k", type=int, required=True)
    po.add_argument("--m", type=int)
    po.add_argument("--n", type=int)
    po.set_defaults(func=cmd_poly)

    v = add("verify", "run the identity suite")
    v.add_argument("--only", action="append", help="restrict to groups (repeatable or comma separated)")
    v.add_argument("--match", help="restrict to case ids containing this text")
    v.add_argument("--json", metavar="PATH", help="write the JSON report to PATH")
    v.add_argument("--jobs", type=int, help="worker processes (default: CPU count)")
    v.add_argument("--verbose", "-v", action="store_true", help="list passing cases too")
    v.set_defaults(func=cmd_verify)

    c = add("constants", "print named constants")
    c.add_argument("names", nargs="*")
    c.set_defaults(func=cmd_constants)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _resolve_config(args)
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"malmsten: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"malmsten: {exc}", file=sys.stderr)
        return EXIT_NOCONV
    except (MalmstenError, ValueError) as exc:
        print(f"malmsten: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
