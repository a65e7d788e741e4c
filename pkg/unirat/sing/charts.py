"""
Blow-ups of projective 3-space along lines, computed in the two standard charts.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import sympy

from ..expr import MultiPoly, PolyMap, Ring, divide_exact
from ..utils import get_logger
from .curves import SingularityError

logger = get_logger(__name__)


class IndependenceError(SingularityError):
    """The center forms are not linear, or not linearly independent."""


@dataclass(frozen=True)
class ChartTransform:
    """Total transform in one chart, split as (exceptional)^m * strict."""

    ring: Ring
    exceptional: str
    total: MultiPoly
    strict: MultiPoly
    multiplicity: int

    def to_dict(self) -> Dict[str, object]:
        return {
            "ring": list(self.ring.names),
            "exceptional": self.exceptional,
            "total": str(self.total),
            "strict": str(self.strict),
            "multiplicity": self.multiplicity,
        }


@dataclass(frozen=True)
class BlowupCharts:
    change: PolyMap
    charts: Tuple[ChartTransform, ChartTransform]

    @property
    def exceptional_multiplicity(self) -> int:
        return min(chart.multiplicity for chart in self.charts)

    def to_dict(self) -> Dict[str, object]:
        return {
            "coordinates": list(self.change.target.names),
            "exceptional_multiplicity": self.exceptional_multiplicity,
            "charts": [chart.to_dict() for chart in self.charts],
        }


def _linear_row(form: MultiPoly, ring: Ring) -> List[Fraction]:
    if form.ring != ring:
        raise IndependenceError(f"center form {form} is not in ring {ring}")
    if form.is_zero or form.degree != 1 or not form.is_homogeneous:
        raise IndependenceError(f"center form {form} is not a linear form")
    row = [Fraction(0)] * ring.ngens
    for exps, coeff in form.terms.items():
        row[exps.index(1)] = coeff
    return row


def _to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _matrix(rows: List[List[Fraction]]) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in row] for row in rows])


def _complement(rows: List[List[Fraction]], n: int) -> Tuple[int, ...]:
    """Coordinate indices completing ``rows`` to a basis, preferring later variables."""
    for combo in combinations(reversed(range(n)), n - len(rows)):
        units = [[Fraction(int(i == j)) for j in range(n)] for i in combo]
        if _matrix(rows + units).det() != 0:
            return tuple(sorted(combo))
    raise IndependenceError("no coordinate complement found")


def _fresh(base: str, taken: Iterable[str]) -> str:
    """``base``, or ``base`` with the smallest numeric suffix not in ``taken``."""
    taken = set(taken)
    name, k = base, 0
    while name in taken:
        k += 1
        name = f"{base}{k}"
    return name


def _chart(q: MultiPoly, exceptional: int, names: Sequence[str], blowup_var: str) -> ChartTransform:
    """Substitute other = v * exceptional for the other center coordinate."""
    other = 1 - exceptional
    chart_names = list(names)
    chart_names[other] = blowup_var
    ring = Ring(tuple(chart_names))
    images = list(ring.gens())
    images[other] = ring.gen(blowup_var) * ring.gen(names[exceptional])
    total = PolyMap(q.ring, ring, tuple(images))(q)

    m = min(exps[exceptional] for exps in total.terms)
    strict = divide_exact(total, ring.gen(names[exceptional]) ** m) if m else total
    return ChartTransform(ring, names[exceptional], total, strict, m)


def chart_blowup_linear(
    p: MultiPoly,
    center: Tuple[MultiPoly, MultiPoly],
    names: Optional[Tuple[str, str]] = None,
    blowup_var: Optional[str] = None,
) -> BlowupCharts:
    """
    Blow up along the line ``center[0] = center[1] = 0``.

    The ambient coordinates are changed so that the center forms become the
    first two coordinates ``names``; the remaining coordinates are original
    variables. Chart 0 keeps ``names[0]`` as the exceptional coordinate,
    chart 1 keeps ``names[1]``.

    Unset names default to ``xh``, ``uh`` and ``v``, suffixed with a number when the
    ambient ring already uses them.
    """
    if p.is_zero:
        raise SingularityError("cannot blow up the zero polynomial")
    ring = p.ring
    rows = [_linear_row(form, ring) for form in center]
    if _matrix(rows).rank() != len(rows):
        raise IndependenceError(f"center forms {[str(f) for f in center]} are dependent")

    rest = _complement(rows, ring.ngens)
    kept = [ring.names[i] for i in rest]
    if names is None:
        first = _fresh("xh", kept)
        names = (first, _fresh("uh", kept + [first]))
    if blowup_var is None:
        blowup_var = _fresh("v", kept + list(names))
    if len(set(kept) | set(names) | {blowup_var}) != ring.ngens + 1:
        raise SingularityError(f"chart names {names} and {blowup_var!r} clash with {tuple(kept)}")
    units = [[Fraction(int(i == j)) for j in range(ring.ngens)] for i in rest]
    new_ring = Ring(tuple(names) + tuple(kept))
    inverse = _matrix(rows + units).inv()

    # old coordinate i = sum_j inverse[i, j] * new coordinate j
    images = []
    for i in range(ring.ngens):
        terms = {}
        for j in range(ring.ngens):
            coeff = _to_fraction(inverse[i, j])
            if coeff:
                terms[tuple(int(k == j) for k in range(ring.ngens))] = coeff
        images.append(MultiPoly(new_ring, terms))
    change = PolyMap(ring, new_ring, tuple(images))
    q = change(p)

    charts = tuple(_chart(q, exceptional, new_ring.names, blowup_var) for exceptional in (0, 1))
    logger.debug(f"blow-up of {p}: multiplicities {[c.multiplicity for c in charts]}")
    return BlowupCharts(change, charts)
