"""Exact kink-equivalence computations on symmetric integer and rational matrices."""

from .exact import (
    Inertia,
    IntMatrix,
    SymMatrix,
    congruence,
    determinant,
    extend_primitive,
    inertia,
    is_unimodular,
    primitive_scale,
)
from .moves import (
    Congruence,
    Kink,
    Move,
    MoveStats,
    Trace,
    Unkink,
    VerificationReport,
    apply_move,
    trace_stats,
    verify_trace,
)
from .reducer import (
    NEG_DEFINITE,
    NEG_SEMIDEFINITE,
    POS_DEFINITE,
    POS_SEMIDEFINITE,
    eliminate_positive,
    find_positive_vector,
    four_squares,
    integralize_first_row,
    reduce,
)
from .cct import GramFactor, cct_2x2, cct_search, icct_trace, reduce_binary_form
from .goeritz import Diagram, goeritz_matrix, parse_diagram

__all__ = [
    "Inertia",
    "IntMatrix",
    "SymMatrix",
    "congruence",
    "determinant",
    "extend_primitive",
    "inertia",
    "is_unimodular",
    "primitive_scale",
    "Congruence",
    "Kink",
    "Move",
    "MoveStats",
    "Trace",
    "Unkink",
    "VerificationReport",
    "apply_move",
    "trace_stats",
    "verify_trace",
    "NEG_DEFINITE",
    "NEG_SEMIDEFINITE",
    "POS_DEFINITE",
    "POS_SEMIDEFINITE",
    "eliminate_positive",
    "find_positive_vector",
    "four_squares",
    "integralize_first_row",
    "reduce",
    "GramFactor",
    "cct_2x2",
    "cct_search",
    "icct_trace",
    "reduce_binary_form",
    "Diagram",
    "goeritz_matrix",
    "parse_diagram",
]
