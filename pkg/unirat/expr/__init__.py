"""
Exact polynomial arithmetic and the polynomial expression language.
"""

from .parser import (
    NegativeExponentError,
    ParseError,
    UnknownVariableError,
    parse_map,
    parse_poly,
    tokenize,
)
from .poly import (
    DegreeInfo,
    DenominatorError,
    ExprError,
    MultiPoly,
    NonDivisibleError,
    PolyMap,
    Ring,
    RingMismatchError,
    arith,
    as_ring,
    degree_info,
    dehomogenize,
    derivative,
    divide_exact,
    eval_mod_p,
    format_poly,
    grlex_key,
    multiplicity_at,
    reduce_mod_p,
    substitute,
    weighted_degree_info,
)

__all__ = [
    "DegreeInfo",
    "DenominatorError",
    "ExprError",
    "MultiPoly",
    "NegativeExponentError",
    "NonDivisibleError",
    "ParseError",
    "PolyMap",
    "Ring",
    "RingMismatchError",
    "UnknownVariableError",
    "arith",
    "as_ring",
    "degree_info",
    "dehomogenize",
    "derivative",
    "divide_exact",
    "eval_mod_p",
    "format_poly",
    "grlex_key",
    "multiplicity_at",
    "parse_map",
    "parse_poly",
    "reduce_mod_p",
    "substitute",
    "tokenize",
    "weighted_degree_info",
]
