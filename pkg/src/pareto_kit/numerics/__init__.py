"""Exact rational arithmetic and the deterministic LP kernel."""

from .linprog import (
    EQ,
    GE,
    INFEASIBLE,
    LE,
    OPTIMAL,
    UNBOUNDED,
    Constraint,
    LinearProgram,
    LpOutcome,
    active_backend,
    linprog,
    lp_solve,
)
from .rational import (
    Rational,
    as_fraction,
    as_matrix,
    as_point,
    dot,
    rational_format,
    rational_parse,
)

__all__ = [
    "EQ",
    "GE",
    "INFEASIBLE",
    "LE",
    "OPTIMAL",
    "UNBOUNDED",
    "Constraint",
    "LinearProgram",
    "LpOutcome",
    "Rational",
    "active_backend",
    "as_fraction",
    "as_matrix",
    "as_point",
    "dot",
    "linprog",
    "lp_solve",
    "rational_format",
    "rational_parse",
]
