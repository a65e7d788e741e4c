"""
Unirationality verdicts from point counts.

A unirational variety has #Y_p(F_p) = 1 mod p at primes of good reduction,
so a single good prime with a different residue argues against
unirationality. Matching the residues against a newform, or fitting the
full point count, strengthens the evidence.
"""

from typing import AbstractSet, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import Matrix

from ..config import settings
from ..models import Convention, CY3Fit, PointCountRecord, Verdict, VerdictKind
from ..utils import get_logger
from .newforms import NewformSpec, prime_coeffs
from .series import ModularError

logger = get_logger(__name__)

TRACE_SHAPES = ("curve", "k3", "cy3")


class FitError(ModularError):
    pass


class VerdictError(ModularError):
    pass


def good_records(
    records: Iterable[PointCountRecord], bad_primes: Optional[AbstractSet[int]] = None
) -> List[PointCountRecord]:
    """Records at good primes, ordered by p; ``bad_primes`` overrides the per-record flags."""
    if bad_primes is None:
        kept = [record for record in records if record.good_reduction]
    else:
        kept = [record for record in records if record.p not in bad_primes]
    return sorted(kept, key=lambda record: record.p)


def _evidence(good: Sequence[PointCountRecord]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    sigma = tuple(record.p for record in good)
    sigma0 = tuple(record.p for record in good if (record.count - 1) % record.p)
    return sigma, sigma0


def esnault_guess(
    records: Sequence[PointCountRecord],
    bad_primes: Optional[AbstractSet[int]] = None,
    threshold: Optional[int] = None,
) -> Verdict:
    """not_unirational_guess when some good prime has count != 1 mod p, else inconclusive."""
    if not records:
        raise VerdictError("no point counts given")
    threshold = threshold if threshold is not None else settings.modular.sigma0_threshold
    good = good_records(records, bad_primes)
    sigma, sigma0 = _evidence(good)
    details = tuple(
        {"p": r.p, "count": r.count, "count_minus_one_mod_p": (r.count - 1) % r.p} for r in good
    )
    kind = VerdictKind.NOT_UNIRATIONAL_GUESS if sigma0 else VerdictKind.INCONCLUSIVE
    logger.info(f"esnault guess: {kind.value} with |sigma0| = {len(sigma0)} of {len(sigma)}")
    return Verdict(kind, sigma, sigma0, len(sigma0) >= threshold, details)


def congruence_match(
    records: Sequence[PointCountRecord],
    form: NewformSpec,
    convention: Convention,
    bad_primes: Optional[AbstractSet[int]] = None,
    threshold: Optional[int] = None,
) -> Verdict:
    """Pass iff b_p matches the residue of the count at every good prime."""
    threshold = threshold if threshold is not None else settings.modular.sigma0_threshold
    good = good_records(records, bad_primes)
    if not good:
        raise VerdictError("congruence test needs at least one good prime")
    sigma, sigma0 = _evidence(good)
    coeffs = prime_coeffs(form, sigma)

    details = []
    failing = []
    for record in good:
        b = coeffs[record.p]
        residue = record.residue(convention)
        holds = b % record.p == residue
        if not holds:
            failing.append(record.p)
        details.append(
            {"p": record.p, "count": record.count, "b_p": b, "residue": residue, "holds": holds}
        )

    kind = VerdictKind.CONGRUENCE_FAIL if failing else VerdictKind.CONGRUENCE_PASS
    if failing:
        logger.info(f"{form.name} ({convention.value}) fails at {failing}")
    return Verdict(kind, sigma, sigma0, len(sigma0) >= threshold, tuple(details))


def exact_cy3_fit(
    records: Sequence[PointCountRecord],
    form: NewformSpec,
    bad_primes: Optional[AbstractSet[int]] = None,
) -> CY3Fit:
    """
    Integer (c1, c2) with b_p = 1 + c1*p + c2*p^2 + p^3 - count.

    The two largest good primes determine the constants; the others are
    checked in ascending order and the first inconsistent prime is reported.
    """
    good = good_records(records, bad_primes)
    if len(good) < 3:
        raise FitError(f"an exact fit needs at least 3 good primes, got {len(good)}")
    coeffs = prime_coeffs(form, [record.p for record in good])

    basis = good[-2:]
    system = Matrix([[r.p, r.p**2] for r in basis])
    rhs = Matrix([coeffs[r.p] - 1 - r.p**3 + r.count for r in basis])
    c1, c2 = system.LUsolve(rhs)
    if not (c1.is_integer and c2.is_integer):
        raise FitError(f"fit through p = {[r.p for r in basis]} is not integral: ({c1}, {c2})")
    c1, c2 = int(c1), int(c2)

    verified = []
    for record in good[:-2]:
        p = record.p
        if coeffs[p] != 1 + c1 * p + c2 * p**2 + p**3 - record.count:
            logger.info(f"exact fit ({c1}, {c2}) breaks at p={p}")
            return CY3Fit(c1, c2, tuple(r.p for r in basis), tuple(verified), inconsistent_prime=p)
        verified.append(p)
    verified.extend(r.p for r in basis)
    return CY3Fit(c1, c2, tuple(r.p for r in basis), tuple(verified))


def fit_verdict(fit: CY3Fit, records: Sequence[PointCountRecord], bad_primes=None) -> Verdict:
    """Wrap a consistent fit as an exact_fit verdict; failed fits stay a congruence failure."""
    good = good_records(records, bad_primes)
    sigma, sigma0 = _evidence(good)
    kind = VerdictKind.EXACT_FIT if fit.ok else VerdictKind.CONGRUENCE_FAIL
    threshold = settings.modular.sigma0_threshold
    return Verdict(kind, sigma, sigma0, len(sigma0) >= threshold, (fit.to_dict(),))


def weil_bound_check(
    form: NewformSpec, h: int, d: int, primes: Iterable[int]
) -> List[Dict[str, int]]:
    """Primes where b_p^2 > h^2 * p^d."""
    if h < 0 or d < 1:
        raise VerdictError(f"invalid bound parameters h={h}, d={d}")
    coeffs = prime_coeffs(form, primes)
    return [
        {"p": p, "b_p": b, "bound_squared": h * h * p**d}
        for p, b in sorted(coeffs.items())
        if b * b > h * h * p**d
    ]


def lefschetz_trace(record: PointCountRecord, shape: str, k_p: int = 0) -> int:
    """Trace of Frobenius on the middle cohomology implied by a point count."""
    p, count = record.p, record.count
    if shape == "curve":
        return p + 1 - count
    if shape == "k3":
        return count - 1 - p * p
    if shape == "cy3":
        return 1 + (p + p * p) * k_p + p**3 - count
    raise VerdictError(f"unknown trace shape {shape!r}; expected one of {', '.join(TRACE_SHAPES)}")
