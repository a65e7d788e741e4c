"""
Truncated integer q-series, the Euler product and eta quotients.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Mapping, Sequence, Tuple, Union

from ..utils import UniratError, get_logger

logger = get_logger(__name__)


class ModularError(UniratError):
    """Base class for q-series, newform and verdict errors."""


class EtaQuotientError(ModularError):
    pass


class TruncationError(ModularError):
    """A coefficient beyond the available truncation was requested."""


@dataclass(frozen=True)
class QSeries:
    """
    sum_{k=0}^{N} c_k q^k + O(q^{N+1}) with integer coefficients.

    ``coefficients[k]`` is c_k; the truncation N is ``len(coefficients) - 1``.
    """

    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coefficients = tuple(int(c) for c in self.coefficients)
        if not coefficients:
            raise ModularError("a q-series needs at least the constant term")
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def from_terms(
        cls, terms: Union[Mapping[int, int], Sequence[int]], truncation: int
    ) -> "QSeries":
        coefficients = [0] * (truncation + 1)
        items = terms.items() if isinstance(terms, Mapping) else enumerate(terms)
        for k, c in items:
            if 0 <= k <= truncation:
                coefficients[k] = c
        return cls(tuple(coefficients))

    @classmethod
    def one(cls, truncation: int) -> "QSeries":
        return cls.from_terms({0: 1}, truncation)

    @property
    def truncation(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise IndexError(k)
        if k > self.truncation:
            raise TruncationError(
                f"coefficient q^{k} requested from a series known to q^{self.truncation}"
            )
        return self.coefficients[k]

    def truncate(self, truncation: int) -> "QSeries":
        if truncation > self.truncation:
            raise TruncationError(f"cannot extend a series known to q^{self.truncation}")
        return QSeries(self.coefficients[: truncation + 1])

    def _aligned(self, other: "QSeries") -> Tuple[Tuple[int, ...], Tuple[int, ...], int]:
        n = min(self.truncation, other.truncation)
        return self.coefficients[: n + 1], other.coefficients[: n + 1], n

    def __add__(self, other: "QSeries") -> "QSeries":
        a, b, _ = self._aligned(other)
        return QSeries(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "QSeries":
        return QSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __mul__(self, other: Union["QSeries", int]) -> "QSeries":
        if isinstance(other, int):
            return QSeries(tuple(other * c for c in self.coefficients))
        a, b, n = self._aligned(other)
        out = [0] * (n + 1)
        for i, x in enumerate(a):
            if x:
                for j in range(n + 1 - i):
                    out[i + j] += x * b[j]
        return QSeries(tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "QSeries":
        """Truncated inverse of a series with constant term 1."""
        if self.coefficients[0] != 1:
            raise ModularError("only series with constant term 1 are inverted")
        n = self.truncation
        out = [0] * (n + 1)
        out[0] = 1
        for k in range(1, n + 1):
            out[k] = -sum(self.coefficients[j] * out[k - j] for j in range(1, k + 1))
        return QSeries(tuple(out))

    def shift(self, power: int) -> "QSeries":
        """Multiply by q^power, keeping the truncation."""
        if power < 0:
            raise ModularError("negative q-powers are not representable")
        n = self.truncation
        return QSeries((0,) * min(power, n + 1) + self.coefficients[: max(n + 1 - power, 0)])

    def nonzero_terms(self) -> List[Tuple[int, int]]:
        return [(k, c) for k, c in enumerate(self.coefficients) if c]

    def __str__(self) -> str:
        text = ""
        for k, c in self.nonzero_terms():
            monomial = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            body = f"{abs(c)}{monomial}" if abs(c) != 1 or k == 0 else monomial
            if not text:
                text = f"-{body}" if c < 0 else body
            else:
                text += f" - {body}" if c < 0 else f" + {body}"
        return f"{text or 0} + O(q^{self.truncation + 1})"


def pentagonal_terms(limit: int) -> List[Tuple[int, int]]:
    """(k(3k-1)/2, (-1)^k) for all generalized pentagonal numbers up to ``limit``."""
    terms = [(0, 1)]
    k = 1
    while True:
        added = False
        sign = -1 if k % 2 else 1
        for g in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if g <= limit:
                terms.append((g, sign))
                added = True
        if not added:
            break
        k += 1
    return sorted(terms)


def euler_product(truncation: int) -> QSeries:
    """prod_{n >= 1} (1 - q^n) to q^truncation."""
    if truncation < 1:
        raise ModularError("truncation must be at least 1")
    return QSeries.from_terms(dict(pentagonal_terms(truncation)), truncation)


def _multiply_sparse(series: List[int], sparse: Sequence[Tuple[int, int]]) -> List[int]:
    n = len(series) - 1
    out = [0] * (n + 1)
    for index, sign in sparse:
        for k in range(index, n + 1):
            out[k] += sign * series[k - index]
    return out


def _divide_sparse(series: List[int], sparse: Sequence[Tuple[int, int]]) -> List[int]:
    """Solve out * sparse = series; the sparse factor has constant term 1."""
    n = len(series) - 1
    tail = [(index, sign) for index, sign in sparse if index]
    out = [0] * (n + 1)
    for k in range(n + 1):
        out[k] = series[k] - sum(sign * out[k - index] for index, sign in tail if index <= k)
    return out


@dataclass(frozen=True)
class EtaQuotientSpec:
    """prod eta(m*tau)^e over ``factors`` of (m, e)."""

    factors: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        factors = tuple((int(m), int(e)) for m, e in self.factors)
        object.__setattr__(self, "factors", factors)
        if not factors:
            raise EtaQuotientError("an eta quotient needs at least one factor")
        if any(m < 1 for m, _ in factors):
            raise EtaQuotientError("eta multipliers must be positive")
        total = sum(m * e for m, e in factors)
        if total < 0 or total % 24:
            raise EtaQuotientError(
                f"q-power prefactor {Fraction(total, 24)} of {self.to_text()} "
                "is not a non-negative integer"
            )

    @classmethod
    def parse(cls, text: str) -> "EtaQuotientSpec":
        """Read ``"m:e,m:e,..."``."""
        factors = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            m, sep, e = chunk.partition(":")
            if not sep:
                raise EtaQuotientError(f"factor {chunk!r} is not of the form m:e")
            try:
                factors.append((int(m), int(e)))
            except ValueError:
                raise EtaQuotientError(f"factor {chunk!r} is not of the form m:e") from None
        return cls(tuple(factors))

    @property
    def q_shift(self) -> int:
        return sum(m * e for m, e in self.factors) // 24

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(e for _, e in self.factors), 2)

    def to_text(self) -> str:
        return ",".join(f"{m}:{e}" for m, e in self.factors)


@lru_cache(maxsize=64)
def eta_quotient(spec: EtaQuotientSpec, truncation: int) -> QSeries:
    """q^shift * prod (prod_n (1 - q^{m n}))^e, to q^truncation."""
    if truncation < 0:
        raise ModularError("truncation must be non-negative")
    body = truncation - spec.q_shift
    if body < 0:
        return QSeries((0,) * (truncation + 1))

    series = [1] + [0] * body
    for m, e in spec.factors:
        sparse = [(m * g, sign) for g, sign in pentagonal_terms(body // m)]
        step = _multiply_sparse if e > 0 else _divide_sparse
        for _ in range(abs(e)):
            series = step(series, sparse)
    logger.debug(f"eta quotient {spec.to_text()} generated to q^{truncation}")
    return QSeries(tuple([0] * spec.q_shift + series))


def naive_product(factors: Iterable[Tuple[int, int]], truncation: int) -> QSeries:
    """prod (1 - q^n)^e over (n, e) by dense multiplication, for cross-checks."""
    result = QSeries.one(truncation)
    for n, e in factors:
        factor = QSeries.from_terms({0: 1, n: -1}, truncation)
        if e < 0:
            factor, e = factor.inverse(), -e
        for _ in range(e):
            result = result * factor
    return result
