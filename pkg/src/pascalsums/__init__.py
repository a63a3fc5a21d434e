"""Exact lattice sums over the Pascal triangle and their verification."""
from .core import CellIndex, TriangleCache, binomial, fibonacci, pow2, row
from .sums import (
    CorrectionClass,
    alternating_diagonal_sum,
    correction_term,
    hockey_stick_sum,
    horizontal_sum,
    shallow_diagonal_sum,
    theorem_rhs,
    vertical_partial_sum,
)
from .verifier import (
    IdentityReport,
    Region,
    check_identity,
    check_pascal_recurrence,
    inductive_proof_check,
)

__version__ = "0.1.0"

__all__ = [
    "CellIndex",
    "CorrectionClass",
    "IdentityReport",
    "Region",
    "TriangleCache",
    "alternating_diagonal_sum",
    "binomial",
    "check_identity",
    "check_pascal_recurrence",
    "correction_term",
    "fibonacci",
    "hockey_stick_sum",
    "horizontal_sum",
    "inductive_proof_check",
    "pow2",
    "row",
    "shallow_diagonal_sum",
    "theorem_rhs",
    "vertical_partial_sum",
]
