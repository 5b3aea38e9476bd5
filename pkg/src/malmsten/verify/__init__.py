"""Identity registry and runner.

>>> from malmsten.verify import build_default_suite, run
>>> cases = [c for c in build_default_suite(30) if c.group == "exactcomb"]
>>> run(cases[:3], precision=30)["summary"]["failed"]
0
"""

from .cases import GROUPS, QUARANTINE_TAG, IdentityCase, build_default_suite
from .runner import passes_gate, report_to_json, run, run_case

__all__ = [
    "GROUPS",
    "IdentityCase",
    "QUARANTINE_TAG",
    "build_default_suite",
    "passes_gate",
    "report_to_json",
    "run",
    "run_case",
]
