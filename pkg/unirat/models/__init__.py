"""
Shared data models for unirat.

This module defines the record types passed between the computation modules
and the reporting layer: variety models, point-count records, incidence rows,
ledger entries, identity reports and verdicts.
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple

from ..expr import ExprError, MultiPoly, Ring, format_poly, parse_poly, weighted_degree_info
from ..utils import UniratError


class ModelValidationError(UniratError):
    """A variety definition is malformed or inconsistent."""


class ModelKind(Enum):
    """Shape of a countable variety."""

    HYPERSURFACE = "hypersurface"
    DOUBLE_COVER = "double_cover"


class Convention(Enum):
    """Residue convention linking point counts to newform coefficients."""

    WEIGHT3 = "weight3"  # b_p = count - 1 mod p
    WEIGHT4 = "weight4"  # b_p = 1 - count mod p


class VerdictKind(Enum):
    NOT_UNIRATIONAL_GUESS = "not_unirational_guess"
    INCONCLUSIVE = "inconclusive"
    CONGRUENCE_PASS = "congruence_pass"
    CONGRUENCE_FAIL = "congruence_fail"
    EXACT_FIT = "exact_fit"


class GroupLabel(Enum):
    """Congruence subgroup label carried as metadata on newforms."""

    GAMMA0 = "Gamma0"
    GAMMA1 = "Gamma1"
    GAMMA = "Gamma"


CONGRUENCE_CAVEAT = (
    "assumes #Y_p(F_p) is congruent mod p to the point count of a smooth projective "
    "model of Y; this cannot be checked without the resolved model"
)


def _integer(value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"expected an integer, got {value!r}")
    return value


def _variable_name(value: Any) -> str:
    if not isinstance(value, str) or not value:
        raise ValueError(f"expected a variable name, got {value!r}")
    return value


def _list_field(data: Dict[str, Any], key: str, convert) -> Tuple[Any, ...]:
    """A JSON list field of a variety definition, converted item by item."""
    value = data.get(key, [])
    if not isinstance(value, list):
        raise ModelValidationError(f"'{key}' must be a list, got {type(value).__name__}")
    try:
        return tuple(convert(item) for item in value)
    except ValueError as exc:
        raise ModelValidationError(f"'{key}': {exc}") from None


@dataclass(frozen=True)
class VarietyModel:
    """
    A hypersurface or a double cover in a weighted projective ambient.

    ``polynomial`` is the defining polynomial of a hypersurface, or the branch
    polynomial of a double cover; in the latter case it lives in the base
    variables, i.e. ``variables`` without ``cover_variable``.
    """

    name: str
    variables: Tuple[str, ...]
    weights: Tuple[int, ...]
    kind: ModelKind
    polynomial: MultiPoly
    bad_primes: FrozenSet[int] = frozenset()
    cover_variable: Optional[str] = None

    def __post_init__(self):
        try:
            object.__setattr__(self, "variables", tuple(self.variables))
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
            object.__setattr__(self, "bad_primes", frozenset(int(p) for p in self.bad_primes))
        except (TypeError, ValueError) as exc:
            raise ModelValidationError(f"{self.name}: {exc}") from exc

        if not self.name:
            raise ModelValidationError("model name is required")
        if len(self.weights) != len(self.variables):
            raise ModelValidationError(
                f"{self.name}: {len(self.weights)} weights for {len(self.variables)} variables"
            )
        if any(w < 1 for w in self.weights):
            raise ModelValidationError(f"{self.name}: weights must be positive")

        if self.kind is ModelKind.HYPERSURFACE:
            if self.cover_variable is not None:
                raise ModelValidationError(f"{self.name}: a hypersurface has no cover variable")
            if self.polynomial.ring.names != self.variables:
                raise ModelValidationError(f"{self.name}: polynomial ring does not match variables")
            info = weighted_degree_info(self.polynomial, self.weights)
            if self.polynomial.is_zero or not info.is_homogeneous:
                raise ModelValidationError(
                    f"{self.name}: defining polynomial is not weighted homogeneous"
                )
            return

        if self.cover_variable is None:
            object.__setattr__(self, "cover_variable", self.variables[-1])
        if self.cover_variable not in self.variables:
            raise ModelValidationError(
                f"{self.name}: unknown cover variable {self.cover_variable!r}"
            )
        if self.polynomial.ring.names != self.base_variables:
            raise ModelValidationError(
                f"{self.name}: branch must live in the base variables {self.base_variables}"
            )
        if any(w != 1 for w in self.base_weights):
            raise ModelValidationError(
                f"{self.name}: base variables of a double cover need weight 1"
            )
        degree = self.polynomial.degree
        if degree is None or not self.polynomial.is_homogeneous or degree % 2:
            raise ModelValidationError(
                f"{self.name}: branch polynomial must be homogeneous of even degree"
            )
        if self.cover_weight != degree // 2:
            raise ModelValidationError(
                f"{self.name}: cover weight {self.cover_weight} "
                f"is not half the branch degree {degree}"
            )

    @property
    def is_double_cover(self) -> bool:
        return self.kind is ModelKind.DOUBLE_COVER

    @property
    def base_variables(self) -> Tuple[str, ...]:
        if not self.is_double_cover:
            return self.variables
        return tuple(v for v in self.variables if v != self.cover_variable)

    @property
    def base_weights(self) -> Tuple[int, ...]:
        return tuple(w for v, w in zip(self.variables, self.weights) if v in self.base_variables)

    @property
    def cover_weight(self) -> Optional[int]:
        if not self.is_double_cover:
            return None
        return self.weights[self.variables.index(self.cover_variable)]

    @property
    def base_ring(self) -> Ring:
        return self.polynomial.ring

    @property
    def degree(self) -> int:
        return weighted_degree_info(self.polynomial, self.base_weights).degree

    def is_good(self, p: int) -> bool:
        return p not in self.bad_primes

    def with_bad_primes(self, bad_primes: Iterable[int]) -> "VarietyModel":
        return replace(self, bad_primes=frozenset(bad_primes))

    def to_dict(self) -> Dict[str, Any]:
        """Serialize as a variety-definition (VarietyFile) document."""
        data = {
            "name": self.name,
            "variables": list(self.variables),
            "weights": list(self.weights),
            "kind": self.kind.value,
            "polynomial": format_poly(self.polynomial),
            "bad_primes": sorted(self.bad_primes),
        }
        if self.is_double_cover:
            data["cover_variable"] = self.cover_variable
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "VarietyModel":
        """Create a model from a variety-definition document."""
        required = ("name", "variables", "weights", "kind", "polynomial")
        missing = [key for key in required if key not in data]
        if missing:
            raise ModelValidationError(f"variety definition is missing {', '.join(missing)}")
        try:
            kind = ModelKind(data["kind"])
        except (TypeError, ValueError):
            raise ModelValidationError(f"unknown model kind {data['kind']!r}") from None

        name = str(data["name"])
        variables = _list_field(data, "variables", _variable_name)
        weights = _list_field(data, "weights", _integer)
        bad_primes = _list_field(data, "bad_primes", _integer)
        cover = None
        base = variables
        if kind is ModelKind.DOUBLE_COVER:
            if not variables:
                raise ModelValidationError("a double cover needs at least one variable")
            cover = data.get("cover_variable") or variables[-1]
            base = tuple(v for v in variables if v != cover)
        try:
            polynomial = parse_poly(str(data["polynomial"]), base)
        except ExprError as exc:
            raise ModelValidationError(f"{name}: {exc}") from exc

        return cls(
            name=name,
            variables=variables,
            weights=weights,
            kind=kind,
            polynomial=polynomial,
            bad_primes=frozenset(bad_primes),
            cover_variable=cover,
        )


@dataclass(frozen=True)
class PointCountRecord:
    """Point count of one reduction modulo ``p``."""

    p: int
    count: int
    zeros: int
    squares: Optional[int] = None
    nonsquares: Optional[int] = None
    good_reduction: bool = True

    def residue(self, convention: Convention) -> int:
        if convention is Convention.WEIGHT4:
            return (1 - self.count) % self.p
        return (self.count - 1) % self.p

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "count": self.count,
            "zeros": self.zeros,
            "squares": self.squares,
            "nonsquares": self.nonsquares,
            "residue_weight4": self.residue(Convention.WEIGHT4),
            "good_reduction": self.good_reduction,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PointCountRecord":
        return cls(
            p=int(data["p"]),
            count=int(data["count"]),
            zeros=int(data.get("zeros", data["count"])),
            squares=data.get("squares"),
            nonsquares=data.get("nonsquares"),
            good_reduction=bool(data.get("good_reduction", True)),
        )


def format_point(point: Iterable[int]) -> str:
    return "(" + ":".join(str(c) for c in point) + ")"


@dataclass(frozen=True)
class IncidenceRow:
    """A special point of the branch octic with its multiplicity and incidences."""

    point: Tuple[int, ...]
    multiplicity: int
    surfaces: Tuple[str, ...]
    curves: Tuple[str, ...]

    @property
    def label(self) -> str:
        return format_point(self.point)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "point": list(self.point),
            "multiplicity": self.multiplicity,
            "surfaces": list(self.surfaces),
            "curves": list(self.curves),
        }


@dataclass(frozen=True)
class BlowupLedgerEntry:
    """Vanishing orders of the branch components along one blow-up center."""

    center: str
    orders: Tuple[Tuple[str, int], ...]
    total: int

    @property
    def is_even(self) -> bool:
        return self.total % 2 == 0

    def to_dict(self) -> Dict[str, Any]:
        return {"center": self.center, "orders": dict(self.orders), "total": self.total}


@dataclass(frozen=True)
class IdentityCheck:
    """One exact polynomial identity and whether it holds."""

    name: str
    holds: bool
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "holds": self.holds, "detail": self.detail}


@dataclass
class IdentityReport:
    title: str
    checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(check.holds for check in self.checks)

    @property
    def failures(self) -> List[IdentityCheck]:
        return [check for check in self.checks if not check.holds]

    def add(self, name: str, holds: bool, detail: str = "") -> None:
        self.checks.append(IdentityCheck(name, bool(holds), detail))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [check.to_dict() for check in self.checks],
        }


class SymmetryReport(IdentityReport):
    """Outcome of the coordinate-symmetry checks on the alphabet."""


class SigmaReport(IdentityReport):
    """Outcome of the Cremona-map identities."""


@dataclass(frozen=True)
class Verdict:
    """Structured outcome of a point-count test."""

    kind: VerdictKind
    sigma: Tuple[int, ...]
    sigma0: Tuple[int, ...]
    threshold_met: bool
    details: Tuple[Dict[str, Any], ...] = ()
    caveat: str = CONGRUENCE_CAVEAT

    def __post_init__(self):
        if self.kind is VerdictKind.NOT_UNIRATIONAL_GUESS and not self.sigma0:
            raise ValueError("not_unirational_guess requires a prime with count not 1 mod p")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "sigma": list(self.sigma),
            "sigma0": list(self.sigma0),
            "threshold_met": self.threshold_met,
            "details": [dict(detail) for detail in self.details],
            "caveat": self.caveat,
        }


@dataclass(frozen=True)
class CY3Fit:
    """Integer constants of b_p = 1 + c1*p + c2*p^2 + p^3 - count."""

    c1: int
    c2: int
    basis_primes: Tuple[int, ...]
    verified_primes: Tuple[int, ...]
    inconsistent_prime: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.inconsistent_prime is None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "c1": self.c1,
            "c2": self.c2,
            "basis_primes": list(self.basis_primes),
            "verified_primes": list(self.verified_primes),
            "inconsistent_prime": self.inconsistent_prime,
        }


__all__ = [
    "CONGRUENCE_CAVEAT",
    "BlowupLedgerEntry",
    "CY3Fit",
    "Convention",
    "GroupLabel",
    "IdentityCheck",
    "IdentityReport",
    "IncidenceRow",
    "ModelKind",
    "ModelValidationError",
    "PointCountRecord",
    "SigmaReport",
    "SymmetryReport",
    "Verdict",
    "VerdictKind",
    "VarietyModel",
    "format_point",
]
