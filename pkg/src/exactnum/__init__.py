from .vectors import (
    IntVec,
    RatVec,
    int_vec,
    primitive,
    primitive_rational,
    is_zero,
    dot,
    combine,
    support,
    positive_part,
    negative_part,
    unit,
    restrict,
    lift,
)
from .matrix import RatMatrix, rank, rank_of, rref, solve, row_space_basis

__all__ = [
    "IntVec",
    "RatVec",
    "int_vec",
    "primitive",
    "primitive_rational",
    "is_zero",
    "dot",
    "combine",
    "support",
    "positive_part",
    "negative_part",
    "unit",
    "restrict",
    "lift",
    "RatMatrix",
    "rank",
    "rank_of",
    "rref",
    "solve",
    "row_space_basis",
]
