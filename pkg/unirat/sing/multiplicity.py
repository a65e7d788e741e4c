"""
Vanishing orders of surfaces along curves, computed on transversal slices.

At a sample point P of a curve C with tangent T, a 2-plane P + b*V1 + c*V2
with det[P, T, V1, V2] != 0 meets the cone over C transversally, and the
order of a surface along C is the lowest degree of its restriction to that
plane. The order is the minimum over several sample points.
"""

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
import sympy
from tenacity import Retrying, retry_if_exception_type, stop_after_attempt

from ..alphabet import build_fixture
from ..config import settings
from ..expr import MultiPoly, PolyMap, Ring, multiplicity_at
from ..models import BlowupLedgerEntry, IdentityReport
from ..utils import get_logger
from .charts import chart_blowup_linear
from .curves import CurveComponent, SingularityError, curve_by_label, is_table_point

logger = get_logger(__name__)

SLICE_RING = Ring(("b", "c"))

# Blow-up centers in the order they are blown up.
LEDGER_CENTERS = ("B_{1,6}", "B_{2,5}", "B_{5,6}^1", "B_{3,6}^1", "B_{4,5}^1")


class DegenerateSliceError(SingularityError):
    """The random plane is not transversal, or a component vanishes on it."""


class LedgerError(SingularityError):
    """A blow-up center does not have the expected total order."""


@dataclass(frozen=True)
class CurveOrders:
    """Per-component vanishing orders along one curve."""

    curve: str
    orders: Tuple[Tuple[str, int], ...]
    samples: Tuple[Tuple[int, ...], ...]
    agree: bool

    @property
    def total(self) -> int:
        return sum(order for _, order in self.orders)

    def as_dict(self) -> Dict[str, int]:
        return dict(self.orders)

    def to_ledger_entry(self) -> BlowupLedgerEntry:
        return BlowupLedgerEntry(center=self.curve, orders=self.orders, total=self.total)


Divisor = Union[Mapping[str, MultiPoly], Sequence[MultiPoly]]


def _labelled(divisor: Divisor) -> List[Tuple[str, MultiPoly]]:
    if isinstance(divisor, Mapping):
        return list(divisor.items())
    return [(f"B_{i}", poly) for i, poly in enumerate(divisor, start=1)]


def sample_parameters(curve: CurveComponent, samples: int) -> List[int]:
    """Small parameter values s (with r = 1) whose points avoid the special points."""
    chosen: List[int] = []
    s = 0
    while len(chosen) < samples:
        point = curve.point_at(s)
        if any(point) and not is_table_point(point):
            chosen.append(s)
        s += 1
    return chosen


def _slice_orders(
    components: List[Tuple[str, MultiPoly]],
    point: Tuple[int, ...],
    tangent: Tuple[int, ...],
    rng: np.random.Generator,
    coordinate_range: int,
) -> Dict[str, int]:
    v1, v2 = (
        tuple(int(v) for v in rng.integers(-coordinate_range, coordinate_range + 1, len(point)))
        for _ in range(2)
    )
    if sympy.Matrix([point, tangent, v1, v2]).det() == 0:
        raise DegenerateSliceError(f"plane through {point} is not transversal")

    ring = components[0][1].ring
    plane = PolyMap(
        ring,
        SLICE_RING,
        tuple(
            MultiPoly(SLICE_RING, {(0, 0): p, (1, 0): a, (0, 1): b})
            for p, a, b in zip(point, v1, v2)
        ),
    )
    orders = {}
    for label, poly in components:
        restricted = plane(poly)
        if restricted.is_zero:
            raise DegenerateSliceError(f"{label} vanishes on the slice through {point}")
        orders[label] = multiplicity_at(restricted, (0, 0))
    return orders


def mult_along_curve(
    divisor: Divisor,
    curve: CurveComponent,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> CurveOrders:
    """
    Vanishing order of each divisor component along ``curve``.

    Planes are drawn from a generator seeded with ``seed`` (default from
    settings) and redrawn on degeneracy up to ``sampling.max_attempts`` times.
    """
    config = settings.sampling
    samples = samples if samples is not None else config.samples
    if samples < 1:
        raise SingularityError("at least one sample point is required")
    components = _labelled(divisor)
    if not components:
        raise SingularityError("empty divisor")
    rng = np.random.default_rng(config.seed if seed is None else seed)

    per_sample: List[Dict[str, int]] = []
    points: List[Tuple[int, ...]] = []
    for s in sample_parameters(curve, samples):
        point = curve.point_at(s)
        tangent = curve.tangent_at(s)
        for attempt in Retrying(
            stop=stop_after_attempt(config.max_attempts),
            retry=retry_if_exception_type(DegenerateSliceError),
            reraise=True,
        ):
            with attempt:
                orders = _slice_orders(components, point, tangent, rng, config.coordinate_range)
        per_sample.append(orders)
        points.append(point)

    agree = all(orders == per_sample[0] for orders in per_sample)
    if not agree:
        logger.warning(f"sample points disagree along {curve.label}: {per_sample}")
    minimum = tuple((label, min(orders[label] for orders in per_sample)) for label, _ in components)
    result = CurveOrders(curve=curve.label, orders=minimum, samples=tuple(points), agree=agree)
    logger.debug(f"orders along {curve.label}: {result.as_dict()} (total {result.total})")
    return result


def vanishes_on(poly: MultiPoly, curve: CurveComponent) -> bool:
    """True when ``poly`` restricted to the parametrization is identically zero."""
    return curve.parametrization(poly).is_zero


def blowup_ledger(seed: Optional[int] = None) -> List[BlowupLedgerEntry]:
    """Orders of B_1..B_6 along the five blow-up centers; each total must be 2."""
    surfaces = build_fixture().components
    entries = []
    for label in LEDGER_CENTERS:
        entry = mult_along_curve(surfaces, curve_by_label(label), seed=seed).to_ledger_entry()
        if entry.total != 2:
            raise LedgerError(f"center {label} has total order {entry.total}, expected 2")
        entries.append(entry)
    return entries


def ledger_chart_check(entries: Optional[Sequence[BlowupLedgerEntry]] = None) -> IdentityReport:
    """Slice totals agree with the chart exceptional multiplicity on linear centers."""
    fx = build_fixture()
    entries = entries if entries is not None else blowup_ledger()
    report = IdentityReport("ledger vs charts")
    for entry in entries:
        curve = curve_by_label(entry.center)
        if not curve.is_linear:
            continue
        charts = chart_blowup_linear(fx.branch, curve.equations)
        report.add(
            f"{entry.center}: exceptional multiplicity "
            f"{charts.exceptional_multiplicity} = total {entry.total}",
            charts.exceptional_multiplicity == entry.total,
        )
    return report
