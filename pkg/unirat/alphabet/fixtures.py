"""
The six alphabet polynomials, the branch components, the Cremona map and the
builtin variety models.
"""

from dataclasses import dataclass
from functools import lru_cache, reduce
from operator import mul
from typing import Dict, List, Tuple

from ..expr import MultiPoly, PolyMap, Ring, parse_map, parse_poly
from ..models import ModelKind, ModelValidationError, VarietyModel

RING = Ring(("x", "y", "z", "t"))

ALPHABET = {
    "f1": "4*x - z",
    "f2": "4*y - z",
    "f3": "4*x^2*y - z*(y-t)^2",
    "f4": "4*x*y^2 - z*(x-t)^2",
    "f5": "(x-y)^2 - 2*(x+y)*t + t^2",
    "f6": "(x-y)^2 - 2*(x+y)*(z+t) + (z+t)^2",
}

BRANCH_COMPONENTS = {
    "B_1": "x",
    "B_2": "y",
    "B_3": "x - z",
    "B_4": "y - z",
    "B_5": "y*z - (x-t)^2",
    "B_6": "x*z - (y-t)^2",
}

SIGMA = ("x*z", "y*z", "4*x*y", "t*z")
SWAP = ("y", "x", "z", "t")
SHIFT = ("x", "y", "z", "z + t")

Q_RING = ("x1", "x2", "x3", "x4")
Q_POLYNOMIAL = (
    "-x3^2*(x4^2 - x1*x2) + (x1 + x2)*(x1*x4^2 + x2*x4^2 - 4*x1*x2*x4 + x1^2*x2 + x1*x2^2)"
)
S_BASE = ("y1", "y2", "y3")
S_BRANCH = "(y1^2 + y2^2 - 2*y3^2)*(y1^2*y2^2 - y3^4)"
FERMAT_QUARTIC = "x^4 + y^4 + z^4 + t^4"


@dataclass(frozen=True)
class AlphabetFixture:
    """Polynomials of the square-root alphabet and the double octic built from them."""

    ring: Ring
    f1: MultiPoly
    f2: MultiPoly
    f3: MultiPoly
    f4: MultiPoly
    f5: MultiPoly
    f6: MultiPoly
    f: MultiPoly
    sigma: PolyMap
    swap: PolyMap
    shift: PolyMap
    B1: MultiPoly
    B2: MultiPoly
    B3: MultiPoly
    B4: MultiPoly
    B5: MultiPoly
    B6: MultiPoly

    @property
    def polys(self) -> Dict[str, MultiPoly]:
        return {name: getattr(self, name) for name in ALPHABET}

    @property
    def components(self) -> Dict[str, MultiPoly]:
        """Branch components keyed by label, B_1 through B_6."""
        return {
            "B_1": self.B1,
            "B_2": self.B2,
            "B_3": self.B3,
            "B_4": self.B4,
            "B_5": self.B5,
            "B_6": self.B6,
        }

    @property
    def branch(self) -> MultiPoly:
        """The octic B = B1*B2*...*B6."""
        return reduce(mul, self.components.values())


@lru_cache(maxsize=None)
def build_fixture() -> AlphabetFixture:
    polys = {name: parse_poly(text, RING) for name, text in ALPHABET.items()}
    parts = [parse_poly(text, RING) for text in BRANCH_COMPONENTS.values()]
    return AlphabetFixture(
        ring=RING,
        f=polys["f1"] * polys["f2"] * polys["f3"] * polys["f4"],
        sigma=parse_map(RING, RING, SIGMA),
        swap=parse_map(RING, RING, SWAP),
        shift=parse_map(RING, RING, SHIFT),
        B1=parts[0],
        B2=parts[1],
        B3=parts[2],
        B4=parts[3],
        B5=parts[4],
        B6=parts[5],
        **polys,
    )


@lru_cache(maxsize=None)
def _builtin_models() -> Tuple[VarietyModel, ...]:
    fx = build_fixture()
    octic_ambient = RING.names + ("w",)
    return (
        VarietyModel(
            name="X",
            variables=octic_ambient,
            weights=(1, 1, 1, 1, 4),
            kind=ModelKind.DOUBLE_COVER,
            polynomial=fx.branch,
            bad_primes=frozenset({2, 3}),
            cover_variable="w",
        ),
        VarietyModel(
            name="calX",
            variables=octic_ambient,
            weights=(1, 1, 1, 1, 4),
            kind=ModelKind.DOUBLE_COVER,
            polynomial=fx.f,
            bad_primes=frozenset({2, 3}),
            cover_variable="w",
        ),
        VarietyModel(
            name="Q",
            variables=Q_RING,
            weights=(1, 1, 1, 1),
            kind=ModelKind.HYPERSURFACE,
            polynomial=parse_poly(Q_POLYNOMIAL, Q_RING),
            bad_primes=frozenset({2}),
        ),
        VarietyModel(
            name="S",
            variables=("y0",) + S_BASE,
            weights=(3, 1, 1, 1),
            kind=ModelKind.DOUBLE_COVER,
            polynomial=parse_poly(S_BRANCH, S_BASE),
            bad_primes=frozenset({2}),
            cover_variable="y0",
        ),
        VarietyModel(
            name="fermat",
            variables=RING.names,
            weights=(1, 1, 1, 1),
            kind=ModelKind.HYPERSURFACE,
            polynomial=parse_poly(FERMAT_QUARTIC, RING),
            bad_primes=frozenset({2}),
        ),
    )


def build_models() -> List[VarietyModel]:
    """X, calX, Q, S and the Fermat quartic, in that order."""
    return list(_builtin_models())


def model_by_name(name: str) -> VarietyModel:
    for model in _builtin_models():
        if model.name == name:
            return model
    known = ", ".join(model.name for model in _builtin_models())
    raise ModelValidationError(f"unknown builtin model {name!r} (known: {known})")
