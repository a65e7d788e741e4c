"""
Published values the reproduction is compared against.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

from ..models import IncidenceRow


def _row(point, multiplicity, surfaces, curves) -> IncidenceRow:
    return IncidenceRow(tuple(point), multiplicity, tuple(surfaces.split()), tuple(curves.split()))


TABLE1: Tuple[IncidenceRow, ...] = (
    _row((1, 0, 0, 1), 4, "B_2 B_4 B_5", "B_{2,4} B_{2,5} B_{4,5}^1 B_{4,5}^2"),
    _row((0, 1, 0, 1), 4, "B_1 B_3 B_6", "B_{1,3} B_{1,6} B_{3,6}^1 B_{3,6}^2"),
    _row((0, -1, -1, 1), 3, "B_1 B_4 B_5", "B_{1,4} B_{1,5} B_{4,5}^2"),
    _row((-1, 0, -1, 1), 3, "B_2 B_3 B_6", "B_{2,3} B_{2,6} B_{3,6}^2"),
    _row((1, 0, 0, 0), 3, "B_2 B_4 B_6", "B_{2,4} B_{2,6} B_{4,6}"),
    _row((0, 1, 0, 0), 3, "B_1 B_3 B_5", "B_{1,3} B_{1,5} B_{3,5}"),
    _row((0, 0, 1, 0), 4, "B_1 B_2 B_5 B_6", "B_{1,2} B_{1,5} B_{1,6} B_{2,5} B_{2,6} B_{5,6}^2"),
    _row((0, 0, 0, 1), 4, "B_1 B_2 B_3 B_4", "B_{1,2} B_{1,3} B_{1,4} B_{2,3} B_{2,4} B_{3,4}"),
    _row((0, 1, 1, 1), 4, "B_1 B_4 B_5 B_6", "B_{1,4} B_{1,5} B_{1,6} B_{4,5}^1 B_{4,6} B_{5,6}^1"),
    _row((1, 0, 1, 1), 4, "B_2 B_3 B_5 B_6", "B_{2,3} B_{2,5} B_{2,6} B_{3,5} B_{3,6}^1 B_{5,6}^1"),
    _row((1, 1, 0, 1), 2, "B_5 B_6", "B_{5,6}^1 B_{5,6}^2"),
    _row(
        (1, 1, 1, 0), 4, "B_3 B_4 B_5 B_6", "B_{3,4} B_{3,5} B_{3,6}^2 B_{4,5}^2 B_{4,6} B_{5,6}^2"
    ),
    _row(
        (1, 1, 1, 2), 4, "B_3 B_4 B_5 B_6", "B_{3,4} B_{3,5} B_{3,6}^1 B_{4,5}^1 B_{4,6} B_{5,6}^2"
    ),
    _row((1, 1, 4, 3), 2, "B_5 B_6", "B_{5,6}^1 B_{5,6}^2"),
    _row((1, 4, 1, 3), 3, "B_3 B_5 B_6", "B_{3,5} B_{3,6}^2 B_{5,6}^1"),
    _row((4, 1, 1, 3), 3, "B_4 B_5 B_6", "B_{4,5}^2 B_{4,6} B_{5,6}^1"),
)

_PRIMES = (
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
)
_COUNTS = (
    46, 180, 500, 1716, 2732, 6060, 8132, 13932, 27492, 33476, 55580, 75276,
    86612, 112380, 159492, 219492, 241916, 317300, 376716, 409532, 517892, 599172, 735132, 948380,
)
_RESIDUES = (0, 1, 5, 1, 12, 10, 1, 7, 1, 5, 32, 1, 34, 45, 39, 48, 11, 13, 11, 72, 33, 6, 9, 87)

TABLE2_COUNTS: Dict[int, int] = dict(zip(_PRIMES, _COUNTS))
TABLE2_RESIDUES: Dict[int, int] = dict(zip(_PRIMES, _RESIDUES))

LEDGER_TOTALS: Dict[str, int] = {
    "B_{1,6}": 2,
    "B_{2,5}": 2,
    "B_{5,6}^1": 2,
    "B_{3,6}^1": 2,
    "B_{4,5}^1": 2,
}


def _sparse(length: int, nonzero: Dict[int, int]) -> Tuple[int, ...]:
    return tuple(nonzero.get(k, 0) for k in range(1, length + 1))


# b_1, b_2, ... of each candidate newform as published
FORM_PREFIXES: Dict[str, Tuple[int, ...]] = {
    "level6_weight4": (1, -2, -3, 4, 6, 6, -16, -8, 9, -12, 12),
    "level16_weight3": _sparse(
        37, {1: 1, 5: -6, 9: 9, 13: 10, 17: -30, 25: 11, 29: 42, 37: -70}
    ),
    "level8_weight3": (1, -2, -2, 4, 0, 4, 0, -8, -5, 0, 14, -8),
}


@dataclass(frozen=True)
class ExpectationTable:
    """Every value the reproduction checks, keyed by section."""

    table1: Tuple[IncidenceRow, ...] = TABLE1
    counts: Dict[int, int] = field(default_factory=lambda: dict(TABLE2_COUNTS))
    residues: Dict[int, int] = field(default_factory=lambda: dict(TABLE2_RESIDUES))
    ledger_totals: Dict[str, int] = field(default_factory=lambda: dict(LEDGER_TOTALS))
    curve_count: int = 18
    cy3_fit: Tuple[int, int] = (-8, 4)
    cy3_form: str = "level6_weight4"
    k3_forms: Dict[str, str] = field(
        default_factory=lambda: {"Q": "level16_weight3", "S": "level8_weight3"}
    )
    form_prefixes: Dict[str, Tuple[int, ...]] = field(default_factory=lambda: dict(FORM_PREFIXES))

    def table1_row(self, point) -> IncidenceRow:
        for row in self.table1:
            if row.point == tuple(point):
                return row
        raise KeyError(point)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "table1": [row.to_dict() for row in self.table1],
            "counts": dict(self.counts),
            "residues": dict(self.residues),
            "ledger_totals": dict(self.ledger_totals),
            "curve_count": self.curve_count,
            "cy3_fit": list(self.cy3_fit),
            "cy3_form": self.cy3_form,
            "k3_forms": dict(self.k3_forms),
            "form_prefixes": {name: list(prefix) for name, prefix in self.form_prefixes.items()},
        }


def load_expectations() -> ExpectationTable:
    return ExpectationTable()
