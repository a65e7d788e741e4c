"""
Point counting over prime fields.
"""

from .enumerate import (
    VECTOR_DIMS,
    compare_counts_mod_p,
    count_points,
    count_range,
    residue_report,
    restrict_primes,
)
from .field import NONSQUARE, SQUARE, ZERO, CountError, PrimeFieldCtx, make_ctx, projective_size
from .naive import count_points_naive

__all__ = [
    "NONSQUARE",
    "SQUARE",
    "VECTOR_DIMS",
    "ZERO",
    "CountError",
    "PrimeFieldCtx",
    "compare_counts_mod_p",
    "count_points",
    "count_points_naive",
    "count_range",
    "make_ctx",
    "projective_size",
    "residue_report",
    "restrict_primes",
]
