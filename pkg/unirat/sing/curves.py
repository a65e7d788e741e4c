"""
The 18 rational curves in the singular locus of the branch octic and the
16 points where they meet.

Each curve is given by a defining pair of polynomials together with a
parametrization in the projective parameter (s:r); the catalog verifies that
the parametrization kills both equations before handing it out.
"""

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..alphabet import RING, build_fixture
from ..expr import MultiPoly, PolyMap, Ring, derivative, multiplicity_at, parse_map, parse_poly
from ..models import IdentityReport, IncidenceRow, format_point
from ..utils import UniratError, get_logger

logger = get_logger(__name__)

PARAM_RING = Ring(("s", "r"))


class SingularityError(UniratError):
    """Base class for singular-locus bookkeeping errors."""


# Points of the arrangement where at least two curves meet, in table order.
TABLE1_POINTS: Tuple[Tuple[int, ...], ...] = (
    (1, 0, 0, 1),
    (0, 1, 0, 1),
    (0, -1, -1, 1),
    (-1, 0, -1, 1),
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
    (0, 1, 1, 1),
    (1, 0, 1, 1),
    (1, 1, 0, 1),
    (1, 1, 1, 0),
    (1, 1, 1, 2),
    (1, 1, 4, 3),
    (1, 4, 1, 3),
    (4, 1, 1, 3),
)

# label: (defining pair, parametrization in (s, r))
_CATALOG = (
    ("B_{1,2}", ("x", "y"), ("0", "0", "s", "r")),
    ("B_{1,3}", ("x", "x - z"), ("0", "s", "0", "r")),
    ("B_{1,4}", ("x", "y - z"), ("0", "s", "s", "r")),
    ("B_{1,5}", ("x", "y*z - (x-t)^2"), ("0", "s^2", "r^2", "s*r")),
    ("B_{1,6}", ("x", "y - t"), ("0", "s", "r", "s")),
    ("B_{2,3}", ("y", "x - z"), ("s", "0", "s", "r")),
    ("B_{2,4}", ("y", "y - z"), ("s", "0", "0", "r")),
    ("B_{2,5}", ("y", "x - t"), ("s", "0", "r", "s")),
    ("B_{2,6}", ("y", "x*z - (y-t)^2"), ("s^2", "0", "r^2", "s*r")),
    ("B_{3,4}", ("x - z", "y - z"), ("s", "s", "s", "r")),
    ("B_{3,5}", ("x - z", "y*z - (x-t)^2"), ("s^2", "r^2", "s^2", "s^2 - s*r")),
    ("B_{3,6}^1", ("x - z", "x + y - t"), ("s", "r", "s", "s + r")),
    ("B_{3,6}^2", ("x - z", "x - y + t"), ("s", "r", "s", "r - s")),
    ("B_{4,5}^1", ("y - z", "x + y - t"), ("s", "r", "r", "s + r")),
    ("B_{4,5}^2", ("y - z", "y - x + t"), ("s", "r", "r", "s - r")),
    ("B_{4,6}", ("y - z", "x*z - (y-t)^2"), ("r^2", "s^2", "s^2", "s^2 - s*r")),
    (
        "B_{5,6}^1",
        ("x + y + z - 2*t", "y*z - (x-t)^2"),
        ("(s+r)^2", "s^2", "r^2", "s^2 + s*r + r^2"),
    ),
    ("B_{5,6}^2", ("x - y", "y*z - (x-t)^2"), ("s^2", "s^2", "r^2", "s^2 - s*r")),
)


@dataclass(frozen=True)
class CurveComponent:
    """A rational curve of the singular locus with a verified parametrization."""

    label: str
    equations: Tuple[MultiPoly, MultiPoly]
    parametrization: PolyMap

    @property
    def kind(self) -> str:
        linear = all(image.degree in (None, 0, 1) for image in self.parametrization.images)
        return "line" if linear else "conic"

    @property
    def is_linear(self) -> bool:
        return all(eq.degree == 1 and eq.is_homogeneous for eq in self.equations)

    def contains(self, point: Sequence[int]) -> bool:
        return all(eq.evaluate(point) == 0 for eq in self.equations)

    def point_at(self, s: int, r: int = 1) -> Tuple[int, ...]:
        return tuple(int(c) for c in self.parametrization.at((s, r)))

    def tangent_at(self, s: int, r: int = 1) -> Tuple[int, ...]:
        """Derivative of the parametrization in s at (s:r)."""
        images = self.parametrization.images
        return tuple(int(derivative(image, "s").evaluate((s, r))) for image in images)

    def verify(self) -> bool:
        return all(self.parametrization(eq).is_zero for eq in self.equations)

    def to_dict(self) -> Dict[str, object]:
        return {
            "label": self.label,
            "kind": self.kind,
            "equations": [str(eq) for eq in self.equations],
            "parametrization": [str(image) for image in self.parametrization.images],
        }


def same_projective_point(a: Sequence, b: Sequence) -> bool:
    """True when two nonzero vectors are proportional."""
    n = len(a)
    return all(a[i] * b[j] == a[j] * b[i] for i in range(n) for j in range(i + 1, n))


def is_table_point(point: Sequence[int]) -> bool:
    return any(same_projective_point(point, special) for special in TABLE1_POINTS)


@lru_cache(maxsize=None)
def _catalog() -> Tuple[CurveComponent, ...]:
    curves = []
    for label, pair, images in _CATALOG:
        curve = CurveComponent(
            label=label,
            equations=tuple(parse_poly(text, RING) for text in pair),
            parametrization=parse_map(RING, PARAM_RING, images),
        )
        if not curve.verify():
            raise SingularityError(f"parametrization of {label} does not satisfy its equations")
        curves.append(curve)

    report = split_identities()
    if not report.ok:
        names = ", ".join(check.name for check in report.failures)
        raise SingularityError(f"split identities failed: {names}")
    return tuple(curves)


def curve_catalog() -> List[CurveComponent]:
    """All 18 curves, ordered by label."""
    return list(_catalog())


def curve_by_label(label: str) -> CurveComponent:
    for curve in _catalog():
        if curve.label == label:
            return curve
    raise SingularityError(f"unknown curve {label!r}")


def split_identities() -> IdentityReport:
    """Exact identities certifying how the reducible intersections split."""
    fx = build_fixture()
    report = IdentityReport("split identities")

    def P(text):
        return parse_poly(text, RING)

    on_x_eq_z = parse_map(RING, RING, ("x", "y", "x", "t"))
    on_z_eq_y = parse_map(RING, RING, ("x", "y", "y", "t"))
    on_x_zero = parse_map(RING, RING, ("0", "y", "z", "t"))
    on_y_zero = parse_map(RING, RING, ("x", "0", "z", "t"))

    report.add("B_6 on x=z splits as (x+y-t)(x-y+t)", on_x_eq_z(fx.B6) == P("(x+y-t)*(x-y+t)"))
    report.add("B_5 on z=y splits as (y+x-t)(y-x+t)", on_z_eq_y(fx.B5) == P("(y+x-t)*(y-x+t)"))
    report.add("B_5 - B_6 = (y-x)(x+y+z-2t)", fx.B5 - fx.B6 == P("(y-x)*(x+y+z-2*t)"))
    report.add("B_6 on x=0 is -(y-t)^2", on_x_zero(fx.B6) == P("-(y-t)^2"))
    report.add("B_5 on y=0 is -(x-t)^2", on_y_zero(fx.B5) == P("-(x-t)^2"))
    return report


def node_check(points: Sequence[Sequence[int]] = TABLE1_POINTS) -> IdentityReport:
    """B_5 and B_6 are nodal at exactly one special point each."""
    fx = build_fixture()
    report = IdentityReport("nodes")
    for label, poly, node in (("B_5", fx.B5, (1, 0, 0, 1)), ("B_6", fx.B6, (0, 1, 0, 1))):
        report.add(f"{label} has a node at {format_point(node)}", multiplicity_at(poly, node) == 2)
        elsewhere = [
            p
            for p in points
            if not same_projective_point(p, node) and multiplicity_at(poly, p) > 1
        ]
        report.add(
            f"{label} is smooth at the other special points",
            not elsewhere,
            ", ".join(format_point(p) for p in elsewhere),
        )
    return report


def incidence_table(
    surfaces: Optional[Mapping[str, MultiPoly]] = None,
    points: Sequence[Sequence[int]] = TABLE1_POINTS,
    curves: Optional[Sequence[CurveComponent]] = None,
) -> List[IncidenceRow]:
    """
    One row per point: the components vanishing there, the multiplicity of
    their product B at the point, and the catalog curves through it.
    """
    surfaces = surfaces if surfaces is not None else build_fixture().components
    curves = curves if curves is not None else curve_catalog()

    rows = []
    for point in points:
        point = tuple(int(c) for c in point)
        on = [label for label, poly in surfaces.items() if poly.evaluate(point) == 0]
        multiplicity = sum(multiplicity_at(surfaces[label], point) for label in on)
        through = [curve.label for curve in curves if curve.contains(point)]
        rows.append(IncidenceRow(point, multiplicity, tuple(on), tuple(through)))
    logger.debug(f"incidence table built for {len(rows)} points")
    return rows


def _normalize_mod_p(point: Sequence[int], p: int) -> Optional[Tuple[int, ...]]:
    reduced = [c % p for c in point]
    pivot = next((c for c in reduced if c), None)
    if pivot is None:
        return None
    inverse = pow(pivot, -1, p)
    return tuple(c * inverse % p for c in reduced)


def reduction_collisions(
    points: Sequence[Sequence[int]], p: int
) -> List[Tuple[Tuple[int, ...], List[Tuple[int, ...]]]]:
    """Groups of distinct points that reduce to the same point of P^n(F_p)."""
    groups: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = defaultdict(list)
    for point in points:
        image = _normalize_mod_p(point, p)
        key = image if image is not None else (0,) * len(point)
        groups[key].append(tuple(point))
    return [(image, members) for image, members in sorted(groups.items()) if len(members) > 1]
