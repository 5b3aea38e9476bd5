"""Double-exponential quadrature and the catalog of oracle integrands."""

from .catalog import (
    FORMS,
    SEQUENCES,
    IntegrandSpec,
    integrate,
    list_integrands,
    named_spec,
    oracle_named,
    oracle_sequence,
    sequence_spec,
)
from .de import QuadResult, exp_sinh, integrate_2d_unit_square, tanh_sinh

__all__ = [
    "FORMS",
    "SEQUENCES",
    "IntegrandSpec",
    "QuadResult",
    "exp_sinh",
    "integrate",
    "integrate_2d_unit_square",
    "list_integrands",
    "named_spec",
    "oracle_named",
    "oracle_sequence",
    "sequence_spec",
    "tanh_sinh",
]
