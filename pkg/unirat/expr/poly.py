"""
Exact sparse multivariate polynomials over the rationals.

A :class:`MultiPoly` stores a mapping from exponent tuples to nonzero
``Fraction`` coefficients; two polynomials are equal iff their rings and term
maps are identical. Terms are ordered graded-lexicographically with respect to
the ring's declared variable order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from sympy import isprime

from ..utils import UniratError

Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class ExprError(UniratError):
    """Base class for polynomial errors."""


class RingMismatchError(ExprError):
    """Operands live in different polynomial rings."""


class NonDivisibleError(ExprError):
    """Exact division was requested but the divisor does not divide."""


class DenominatorError(ExprError):
    """A coefficient denominator is not invertible modulo the prime."""


def grlex_key(exps: Exponents) -> Tuple[int, Exponents]:
    """Sort key for graded-lex order; larger keys are larger monomials."""
    return (sum(exps), exps)


@dataclass(frozen=True)
class Ring:
    """An ordered list of variable names."""

    names: Tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        for name in names:
            if not _IDENTIFIER.match(name):
                raise ExprError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ExprError(f"duplicate variable names in {names}")

    @property
    def ngens(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ExprError(f"variable {name!r} is not in ring {self}") from None

    def gen(self, name: str) -> "MultiPoly":
        exps = [0] * self.ngens
        exps[self.index(name)] = 1
        return MultiPoly._raw(self, {tuple(exps): Fraction(1)})

    def gens(self) -> Tuple["MultiPoly", ...]:
        return tuple(self.gen(name) for name in self.names)

    def zero(self) -> "MultiPoly":
        return MultiPoly._raw(self, {})

    def one(self) -> "MultiPoly":
        return MultiPoly.constant(self, 1)

    def __str__(self) -> str:
        return "(" + ", ".join(self.names) + ")"


def as_ring(value: Union[Ring, Sequence[str]]) -> Ring:
    """Accept a Ring or a plain sequence of variable names."""
    if isinstance(value, Ring):
        return value
    if isinstance(value, str):
        raise ExprError("a ring is a sequence of variable names, not a single string")
    return Ring(tuple(value))


@dataclass(frozen=True)
class DegreeInfo:
    """Total degree (``None`` for the zero polynomial) and homogeneity."""

    degree: Optional[int]
    is_homogeneous: bool

    def to_dict(self) -> Dict[str, object]:
        return {"degree": self.degree, "is_homogeneous": self.is_homogeneous}


class MultiPoly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_ring", "_terms", "_hash")

    def __init__(self, ring: Union[Ring, Sequence[str]], terms: Mapping[Exponents, Scalar] = None):
        ring = as_ring(ring)
        clean: Dict[Exponents, Fraction] = {}
        for exps, coeff in dict(terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != ring.ngens:
                raise ExprError(f"monomial {exps} does not match ring {ring}")
            if any(e < 0 for e in exps):
                raise ExprError(f"negative exponent in monomial {exps}")
            value = clean.get(exps, Fraction(0)) + Fraction(coeff)
            if value:
                clean[exps] = value
            else:
                clean.pop(exps, None)
        self._ring = ring
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: Dict[Exponents, Fraction]) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj._ring = ring
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, ring: Union[Ring, Sequence[str]], value: Scalar) -> "MultiPoly":
        ring = as_ring(ring)
        value = Fraction(value)
        if not value:
            return cls._raw(ring, {})
        return cls._raw(ring, {(0,) * ring.ngens: value})

    def __reduce__(self):
        return (MultiPoly, (self._ring, self._terms))

    # -- views ---------------------------------------------------------------

    @property
    def ring(self) -> Ring:
        return self._ring

    @property
    def terms(self) -> Mapping[Exponents, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def nterms(self) -> int:
        return len(self._terms)

    @property
    def degree(self) -> Optional[int]:
        if not self._terms:
            return None
        return max(sum(exps) for exps in self._terms)

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(exps) for exps in self._terms}) <= 1

    def sorted_terms(self) -> Iterable[Tuple[Exponents, Fraction]]:
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def leading_term(self) -> Tuple[Exponents, Fraction]:
        if not self._terms:
            raise ExprError("the zero polynomial has no leading term")
        exps = max(self._terms, key=grlex_key)
        return exps, self._terms[exps]

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> Optional["MultiPoly"]:
        if isinstance(other, MultiPoly):
            if other._ring != self._ring:
                raise RingMismatchError(f"ring {self._ring} does not match ring {other._ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self._ring, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            value = terms.get(exps, 0) + coeff
            if value:
                terms[exps] = value
            else:
                terms.pop(exps, None)
        return MultiPoly._raw(self._ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self._ring, {exps: -coeff for exps, coeff in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self._terms or not other._terms:
            return MultiPoly._raw(self._ring, {})
        acc: Dict[Exponents, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exps = tuple(a + b for a, b in zip(ea, eb))
                acc[exps] = acc.get(exps, 0) + ca * cb
        return MultiPoly._raw(self._ring, {e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ExprError(f"exponent must be a non-negative integer, got {exponent!r}")
        result = self._ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._ring == other._ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == MultiPoly.constant(self._ring, other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._ring, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"MultiPoly({format_poly(self)!r}, ring={self._ring.names})"

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Exact value at a rational point."""
        if len(point) != self._ring.ngens:
            raise ExprError(f"point {tuple(point)} does not match ring {self._ring}")
        values = [Fraction(v) for v in point]
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            term = coeff
            for value, e in zip(values, exps):
                if e:
                    term *= value**e
            total += term
        return total


@lru_cache(maxsize=512)
def reduce_mod_p(p: MultiPoly, prime: int) -> Tuple[Tuple[Exponents, int], ...]:
    """Coefficients of ``p`` reduced into [0, prime), zero residues dropped.

    Cached per (polynomial, prime); ``lru_cache`` is safe under concurrent calls.
    """
    if not isinstance(prime, int) or prime < 2 or not isprime(prime):
        raise ExprError(f"{prime!r} is not a prime")
    reduced = []
    for exps, coeff in p.sorted_terms():
        if coeff.denominator % prime == 0:
            raise DenominatorError(f"coefficient {coeff} is not invertible modulo {prime}")
        residue = coeff.numerator * pow(coeff.denominator, -1, prime) % prime
        if residue:
            reduced.append((exps, residue))
    return tuple(reduced)


def eval_mod_p(p: MultiPoly, point: Sequence[int], prime: int) -> int:
    """Value of ``p`` at an integer point, reduced into [0, prime)."""
    if len(point) != p.ring.ngens:
        raise ExprError(f"point {tuple(point)} does not match ring {p.ring}")
    reduced = reduce_mod_p(p, prime)
    values = [int(v) % prime for v in point]
    total = 0
    for exps, coeff in reduced:
        term = coeff
        for value, e in zip(values, exps):
            if e:
                term = term * pow(value, e, prime) % prime
        total += term
    return total % prime


def arith(op: str, a: MultiPoly, b: Union[MultiPoly, int]) -> MultiPoly:
    """Apply ``add``, ``sub``, ``mul`` or ``pow`` to two operands."""
    if op == "pow":
        return a**b
    if op in ("add", "sub", "mul"):
        if isinstance(b, MultiPoly) and a.ring != b.ring:
            raise RingMismatchError(f"ring {a.ring} does not match ring {b.ring}")
        if op == "add":
            return a + b
        if op == "sub":
            return a - b
        return a * b
    raise ExprError(f"unknown operation {op!r}")


def degree_info(p: MultiPoly) -> DegreeInfo:
    return DegreeInfo(degree=p.degree, is_homogeneous=p.is_homogeneous)


def weighted_degree_info(p: MultiPoly, weights: Sequence[int]) -> DegreeInfo:
    """Degree and homogeneity with respect to per-variable weights."""
    if len(weights) != p.ring.ngens:
        raise ExprError(f"{len(weights)} weights given for ring {p.ring}")
    degrees = {sum(w * e for w, e in zip(weights, exps)) for exps in p.terms}
    return DegreeInfo(degree=max(degrees) if degrees else None, is_homogeneous=len(degrees) <= 1)


def derivative(p: MultiPoly, var: Union[str, int]) -> MultiPoly:
    index = var if isinstance(var, int) else p.ring.index(var)
    terms: Dict[Exponents, Fraction] = {}
    for exps, coeff in p.terms.items():
        e = exps[index]
        if e:
            lowered = exps[:index] + (e - 1,) + exps[index + 1 :]
            terms[lowered] = coeff * e
    return MultiPoly._raw(p.ring, terms)


def dehomogenize(p: MultiPoly, index: int) -> MultiPoly:
    """Set the variable at ``index`` to 1; the ring is unchanged."""
    terms: Dict[Exponents, Fraction] = {}
    for exps, coeff in p.terms.items():
        flat = exps[:index] + (0,) + exps[index + 1 :]
        terms[flat] = terms.get(flat, 0) + coeff
    return MultiPoly._raw(p.ring, {e: c for e, c in terms.items() if c})


@dataclass(frozen=True)
class PolyMap:
    """Substitution ``source variable i -> images[i]``, a ring homomorphism."""

    source: Ring
    target: Ring
    images: Tuple[MultiPoly, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.source.ngens:
            raise ExprError(f"{len(images)} images given for ring {self.source}")
        for image in images:
            if image.ring != self.target:
                raise RingMismatchError(f"image {image} does not live in ring {self.target}")

    @classmethod
    def identity(cls, ring: Ring) -> "PolyMap":
        return cls(ring, ring, ring.gens())

    def __call__(self, p: MultiPoly) -> MultiPoly:
        return substitute(p, self)

    def followed_by(self, other: "PolyMap") -> "PolyMap":
        """Substitute with ``self`` first, then with ``other``."""
        if self.target != other.source:
            raise RingMismatchError(f"cannot compose: {self.target} is not {other.source}")
        return PolyMap(self.source, other.target, tuple(other(image) for image in self.images))

    def at(self, point: Sequence[Scalar]) -> Tuple[Fraction, ...]:
        """Images evaluated at a point of the target ring."""
        return tuple(image.evaluate(point) for image in self.images)


def substitute(p: MultiPoly, m: PolyMap) -> MultiPoly:
    if p.ring != m.source:
        raise RingMismatchError(f"polynomial ring {p.ring} is not the map source {m.source}")
    powers: Dict[Tuple[int, int], MultiPoly] = {}

    def power(index: int, e: int) -> MultiPoly:
        key = (index, e)
        if key not in powers:
            powers[key] = m.images[index] ** e
        return powers[key]

    acc: Dict[Exponents, Fraction] = {}
    for exps, coeff in p.terms.items():
        term = MultiPoly.constant(m.target, coeff)
        for index, e in enumerate(exps):
            if e:
                term = term * power(index, e)
        for te, tc in term.terms.items():
            acc[te] = acc.get(te, 0) + tc
    return MultiPoly._raw(m.target, {e: c for e, c in acc.items() if c})


def multiplicity_at(
    p: MultiPoly, point: Sequence[Scalar], chart: Optional[int] = None
) -> Optional[int]:
    """Lowest total degree of ``p`` after translating ``point`` to the origin.

    The zero polynomial vanishes to every order; its multiplicity is None.

    With ``chart`` set, the point is first scaled so that coordinate is 1 and
    ``p`` is dehomogenized there; the result is the same for homogeneous ``p``.
    """
    coords = [Fraction(v) for v in point]
    if len(coords) != p.ring.ngens:
        raise ExprError(f"point {tuple(point)} does not match ring {p.ring}")
    if p.is_zero:
        return None
    if chart is not None:
        pivot = coords[chart]
        if pivot == 0:
            raise ExprError(f"coordinate {p.ring.names[chart]} vanishes at {tuple(point)}")
        coords = [c / pivot for c in coords]
        p = dehomogenize(p, chart)
        coords[chart] = Fraction(0)
    if p.evaluate(coords) != 0:
        return 0
    ring = p.ring
    shift = PolyMap(ring, ring, tuple(g + c for g, c in zip(ring.gens(), coords)))
    return min(sum(exps) for exps in shift(p).terms)


def divide_exact(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Return ``r`` with ``p == q * r``, or raise :class:`NonDivisibleError`."""
    if p.ring != q.ring:
        raise RingMismatchError(f"ring {p.ring} does not match ring {q.ring}")
    if q.is_zero:
        raise ExprError("division by the zero polynomial")
    ring = p.ring

    if q.nterms == 1:
        (qe, qc), = q.terms.items()
        terms = {}
        for exps, coeff in p.terms.items():
            diff = tuple(a - b for a, b in zip(exps, qe))
            if any(d < 0 for d in diff):
                raise NonDivisibleError(f"{q} does not divide {p}")
            terms[diff] = coeff / qc
        return MultiPoly._raw(ring, terms)

    lead_exps, lead_coeff = q.leading_term()
    remainder = p
    quotient: Dict[Exponents, Fraction] = {}
    while not remainder.is_zero:
        exps, coeff = remainder.leading_term()
        diff = tuple(a - b for a, b in zip(exps, lead_exps))
        if any(d < 0 for d in diff):
            raise NonDivisibleError(f"{q} does not divide {p}")
        factor = coeff / lead_coeff
        quotient[diff] = factor
        remainder = remainder - MultiPoly._raw(ring, {diff: factor}) * q
    return MultiPoly._raw(ring, quotient)


def _format_scalar(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _format_monomial(names: Sequence[str], exps: Exponents) -> str:
    factors = []
    for name, e in zip(names, exps):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def format_poly(p: MultiPoly) -> str:
    """Canonical text form; re-parses to the same polynomial."""
    if p.is_zero:
        return "0"
    pieces = []
    for i, (exps, coeff) in enumerate(p.sorted_terms()):
        magnitude = abs(coeff)
        monomial = _format_monomial(p.ring.names, exps)
        if not monomial:
            body = _format_scalar(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{_format_scalar(magnitude)}*{monomial}"
        if i == 0:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(pieces)
