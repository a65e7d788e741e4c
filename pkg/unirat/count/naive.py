"""
Brute-force point counts, used to cross-check the stratified enumeration.

Every nonzero vector of the ambient affine space is tested against the
equation, and solutions are identified under the weighted scaling
v_i -> lambda^{w_i} v_i by taking the smallest vector in each orbit.
"""

from itertools import product
from typing import Set, Tuple

from ..expr import eval_mod_p
from ..models import PointCountRecord, VarietyModel
from ..utils import get_logger
from .field import make_ctx

logger = get_logger(__name__)


def _canonical(vector: Tuple[int, ...], weights: Tuple[int, ...], p: int) -> Tuple[int, ...]:
    return min(
        tuple(pow(lam, w, p) * v % p for v, w in zip(vector, weights)) for lam in range(1, p)
    )


def count_points_naive(model: VarietyModel, p: int) -> PointCountRecord:
    """Orbit count of nonzero solutions in F_p^{n+1}; intended for small p."""
    make_ctx(p)
    weights = model.weights
    poly = model.polynomial
    orbits: Set[Tuple[int, ...]] = set()

    if not model.is_double_cover:
        for vector in product(range(p), repeat=len(model.variables)):
            if any(vector) and eval_mod_p(poly, vector, p) == 0:
                orbits.add(_canonical(vector, weights, p))
        count = len(orbits)
        return PointCountRecord(p=p, count=count, zeros=count, good_reduction=model.is_good(p))

    cover = model.variables.index(model.cover_variable)
    for base in product(range(p), repeat=len(model.base_variables)):
        branch = eval_mod_p(poly, base, p)
        for w in range(p):
            if (w * w - branch) % p:
                continue
            vector = base[:cover] + (w,) + base[cover:]
            if any(vector):
                orbits.add(_canonical(vector, weights, p))

    zeros = sum(1 for orbit in orbits if orbit[cover] == 0)
    return PointCountRecord(
        p=p,
        count=len(orbits),
        zeros=zeros,
        squares=(len(orbits) - zeros) // 2,
        good_reduction=model.is_good(p),
    )
