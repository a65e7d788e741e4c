"""
Candidate newforms: coefficient sources, anchored validation and the
coefficient-file codec.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Dict, Iterable, Optional, Tuple, Union

from ..config import settings
from ..models import GroupLabel
from ..utils import get_logger
from .series import EtaQuotientSpec, ModularError, QSeries, TruncationError, eta_quotient

logger = get_logger(__name__)


class AnchorMismatchError(ModularError):
    """Generated coefficients disagree with the published prefix."""


class CoefficientFileError(ModularError):
    pass


@dataclass(frozen=True)
class NewformSpec:
    """
    A candidate newform b_1 q + b_2 q^2 + ...

    Exactly one coefficient source is set: an eta quotient, or explicit
    coefficients (index 0 is the constant term). ``anchor`` holds published
    values b_1..b_n every generated series must reproduce.
    """

    name: str
    weight: int
    level: int
    group: GroupLabel = GroupLabel.GAMMA0
    eta: Optional[EtaQuotientSpec] = None
    coefficients: Optional[Tuple[int, ...]] = None
    anchor: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        if (self.eta is None) == (self.coefficients is None):
            raise ModularError(f"{self.name}: give exactly one of an eta quotient or coefficients")
        if self.coefficients is not None:
            object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        object.__setattr__(self, "anchor", tuple(int(c) for c in self.anchor))

    @property
    def source(self) -> str:
        return f"eta {self.eta.to_text()}" if self.eta is not None else "coefficient file"

    @property
    def available(self) -> Optional[int]:
        """Largest index a file-backed form can provide; None when unbounded."""
        return None if self.coefficients is None else len(self.coefficients) - 1

    def series(self, truncation: int) -> QSeries:
        if self.eta is not None:
            return eta_quotient(self.eta, truncation)
        if truncation > self.available:
            raise TruncationError(f"{self.name}: coefficients are only known to q^{self.available}")
        return QSeries(self.coefficients[: truncation + 1])

    def validated_series(self, truncation: int) -> QSeries:
        series = _validated(self, max(truncation, len(self.anchor)))
        return series.truncate(truncation) if truncation < series.truncation else series

    def coefficient_text(self, truncation: int) -> str:
        """b_1..b_truncation as ``k b_k`` lines after ``# key: value`` metadata comments."""
        series = self.validated_series(truncation)
        lines = [
            f"# name: {self.name}",
            f"# weight: {self.weight}",
            f"# level: {self.level}",
            f"# group: {self.group.value}",
        ]
        lines += [f"{k} {series[k]}" for k in range(1, truncation + 1)]
        return "\n".join(lines) + "\n"

    def write_coefficients(self, path: Union[str, Path], truncation: int) -> Path:
        path = Path(path)
        path.write_text(self.coefficient_text(truncation), encoding="utf-8")
        return path

    @classmethod
    def from_coefficient_file(
        cls,
        path: Union[str, Path],
        name: Optional[str] = None,
        weight: Optional[int] = None,
        level: Optional[int] = None,
        group: Optional[GroupLabel] = None,
        anchor: Iterable[int] = (),
    ) -> "NewformSpec":
        """
        Read a coefficient file. Missing indices are zero; ``# key: value``
        comments supply metadata not given as arguments.
        """
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise CoefficientFileError(f"cannot read {path}: {exc}") from exc

        meta: Dict[str, str] = {}
        values: Dict[int, int] = {}
        last = 0
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, sep, value = line[1:].partition(":")
                if sep:
                    meta[key.strip()] = value.strip()
                continue
            parts = line.split()
            try:
                k, b = (int(part) for part in parts)
            except ValueError:
                raise CoefficientFileError(
                    f"{path}:{lineno}: expected 'k b_k', got {raw!r}"
                ) from None
            if k <= last:
                raise CoefficientFileError(f"{path}:{lineno}: index {k} is not ascending")
            values[k] = b
            last = k
        if not values:
            raise CoefficientFileError(f"{path}: no coefficients found")

        try:
            return cls(
                name=name or meta.get("name", path.stem),
                weight=weight if weight is not None else int(meta.get("weight", 0)),
                level=level if level is not None else int(meta.get("level", 0)),
                group=group or GroupLabel(meta.get("group", GroupLabel.GAMMA0.value)),
                coefficients=tuple(values.get(k, 0) for k in range(last + 1)),
                anchor=tuple(anchor),
            )
        except ValueError as exc:
            raise CoefficientFileError(f"{path}: bad metadata: {exc}") from exc

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "weight": self.weight,
            "level": self.level,
            "group": self.group.value,
            "source": self.source,
            "anchor": list(self.anchor),
        }


@lru_cache(maxsize=32)
def _validated(form: NewformSpec, truncation: int) -> QSeries:
    series = form.series(truncation)
    generated = series.coefficients[1 : len(form.anchor) + 1]
    if generated != form.anchor:
        pairs = enumerate(zip(generated, form.anchor), start=1)
        mismatch = next(k for k, (a, b) in pairs if a != b)
        raise AnchorMismatchError(
            f"{form.name}: generated b_{mismatch} = {generated[mismatch - 1]}, "
            f"expected {form.anchor[mismatch - 1]}"
        )
    return series


def prime_coeffs(form: NewformSpec, primes: Iterable[int]) -> Dict[int, int]:
    """b_p for each prime, extending the truncation by doubling up to the configured cap."""
    primes = sorted(set(int(p) for p in primes))
    if not primes:
        return {}
    needed = primes[-1]
    cap = settings.modular.truncation_cap
    truncation = settings.modular.initial_truncation
    while truncation < needed:
        truncation *= 2
    if form.available is not None:
        truncation = min(truncation, max(form.available, len(form.anchor)))
    if truncation > cap or truncation < needed:
        raise TruncationError(
            f"{form.name}: b_{needed} needs q^{needed}, beyond the available truncation"
        )
    series = form.validated_series(truncation)
    return {p: series[p] for p in primes}


def _level16_anchor() -> Tuple[int, ...]:
    anchor = [0] * 40
    for k, b in ((1, 1), (5, -6), (9, 9), (13, 10), (17, -30), (25, 11), (29, 42), (37, -70)):
        anchor[k - 1] = b
    return tuple(anchor)


BUILTIN_FORMS: Dict[str, NewformSpec] = {
    form.name: form
    for form in (
        NewformSpec(
            name="level6_weight4",
            weight=4,
            level=6,
            group=GroupLabel.GAMMA0,
            eta=EtaQuotientSpec(((1, 2), (2, 2), (3, 2), (6, 2))),
            anchor=(1, -2, -3, 4, 6, 6, -16, -8, 9, -12, 12),
        ),
        NewformSpec(
            name="level16_weight3",
            weight=3,
            level=16,
            group=GroupLabel.GAMMA1,
            eta=EtaQuotientSpec(((4, 6),)),
            anchor=_level16_anchor(),
        ),
        NewformSpec(
            name="level8_weight3",
            weight=3,
            level=8,
            group=GroupLabel.GAMMA1,
            eta=EtaQuotientSpec(((1, 2), (2, 1), (4, 1), (8, 2))),
            anchor=(1, -2, -2, 4, 0, 4, 0, -8, -5, 0, 14, -8, 0),
        ),
    )
}


def resolve_form(value: Union[str, NewformSpec]) -> NewformSpec:
    """A builtin name, a coefficient-file path, or an eta spec ``m:e,...``."""
    if isinstance(value, NewformSpec):
        return value
    if value in BUILTIN_FORMS:
        return BUILTIN_FORMS[value]
    if Path(value).is_file():
        return NewformSpec.from_coefficient_file(value)
    if ":" in value:
        return eta_form(EtaQuotientSpec.parse(value))
    raise ModularError(f"unknown form {value!r}: not a builtin, a file or an eta spec")


def eta_form(eta: EtaQuotientSpec) -> NewformSpec:
    """An unanchored form from an eta quotient; level 0 means not recorded."""
    weight = eta.weight
    return NewformSpec(
        name=f"eta[{eta.to_text()}]",
        weight=int(weight) if weight.denominator == 1 else 0,
        level=0,
        eta=eta,
    )
