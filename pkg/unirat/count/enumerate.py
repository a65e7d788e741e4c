"""
Point counts of hypersurfaces and double covers over prime fields.

Projective space is enumerated stratum by stratum: representatives
(0, ..., 0, 1, *, ..., *) with the leading 1 in position i. Within a
stratum the polynomial is evaluated over the free coordinates with numpy,
grouping terms by the exponent of one coordinate at a time.
"""

import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from sympy import divisors, primerange, totient

from ..config import settings
from ..expr import reduce_mod_p
from ..models import Convention, PointCountRecord, VarietyModel
from ..utils import get_logger, log_performance
from .field import CountError, make_ctx, projective_size

logger = get_logger(__name__)

Terms = List[Tuple[Tuple[int, ...], int]]

# Free coordinates evaluated as one numpy array; earlier ones are looped over.
VECTOR_DIMS = 2


def _power_table(p: int, max_exp: int) -> np.ndarray:
    """Row e holds a^e mod p for a in [0, p)."""
    table = np.empty((max_exp + 1, p), dtype=np.int64)
    table[0] = 1
    base = np.arange(p, dtype=np.int64)
    for e in range(1, max_exp + 1):
        table[e] = table[e - 1] * base % p
    return table


def _evaluate_grid(terms: Terms, dims: int, powers: np.ndarray, p: int) -> np.ndarray:
    """Values of sum(c * prod v_j^e_j) over the full grid F_p^dims."""
    if dims == 0:
        return np.array(sum(c for _, c in terms) % p, dtype=np.int64)
    groups: Dict[int, Terms] = defaultdict(list)
    for exps, coeff in terms:
        groups[exps[0]].append((exps[1:], coeff))

    shape = (p,) + (1,) * (dims - 1)
    acc = np.zeros((p,) * dims, dtype=np.int64)
    for e, group in groups.items():
        inner = _evaluate_grid(group, dims - 1, powers, p)
        acc = (acc + powers[e].reshape(shape) * inner) % p
    return acc


def _fix_first(terms: Terms, value: int, p: int) -> Terms:
    merged: Dict[Tuple[int, ...], int] = defaultdict(int)
    for exps, coeff in terms:
        merged[exps[1:]] = (merged[exps[1:]] + coeff * pow(value, exps[0], p)) % p
    return [(exps, coeff) for exps, coeff in merged.items() if coeff]


def _stratum_values(terms: Terms, dims: int, powers: np.ndarray, p: int) -> Iterator[np.ndarray]:
    """Polynomial values over F_p^dims, one array per slice of the leading coordinates."""
    if dims <= VECTOR_DIMS:
        yield np.broadcast_to(_evaluate_grid(terms, dims, powers, p), (p,) * dims)
        return
    for value in range(p):
        yield from _stratum_values(_fix_first(terms, value, p), dims - 1, powers, p)


def _strata(
    reduced: Sequence[Tuple[Tuple[int, ...], int]], nvars: int
) -> Iterator[Tuple[int, Terms]]:
    """For each leading position i, the terms restricted to (0, .., 0, 1, free...)."""
    for lead in range(nvars):
        terms = [(exps[lead + 1 :], coeff) for exps, coeff in reduced if not any(exps[:lead])]
        yield nvars - lead - 1, terms


def _weighted_zero_count(
    weights: Sequence[int], reduced: Terms, powers: np.ndarray, p: int
) -> int:
    """
    Orbits of nonzero zeros under v_i -> lambda^{w_i} v_i, by Burnside's lemma.

    A scalar of order d fixes exactly the vectors supported on the
    coordinates with d | w_i, and phi(d) scalars have order d.
    """
    total = 0
    for d in divisors(p - 1):
        support = [i for i, w in enumerate(weights) if w % d == 0]
        if not support:
            continue
        terms = [
            (tuple(exps[i] for i in support), coeff)
            for exps, coeff in reduced
            if all(e == 0 for i, e in enumerate(exps) if i not in support)
        ]
        zeros = sum(
            int(np.count_nonzero(values == 0))
            for values in _stratum_values(terms, len(support), powers, p)
        )
        constant = sum(coeff for exps, coeff in terms if not any(exps)) % p
        total += int(totient(d)) * (zeros - (constant == 0))
    if total % (p - 1):
        raise CountError(f"orbit count at p={p} is not an integer")
    return total // (p - 1)


def count_points(model: VarietyModel, p: int) -> PointCountRecord:
    """
    Number of F_p-points of ``model``.

    Hypersurfaces count zeros of the defining polynomial; in a weighted
    ambient these are orbits of the weighted scaling. Double covers
    count 1 point over each branch zero, 2 over each nonzero square and 0
    over each non-square.
    """
    ctx = make_ctx(p)
    reduced = reduce_mod_p(model.polynomial, p)
    nvars = model.polynomial.ring.ngens
    max_exp = max((max(exps) for exps, _ in reduced), default=0)
    powers = _power_table(p, max_exp)
    good = model.is_good(p)

    if not model.is_double_cover and any(w != 1 for w in model.weights):
        zeros = _weighted_zero_count(model.weights, list(reduced), powers, p)
        return PointCountRecord(p=p, count=zeros, zeros=zeros, good_reduction=good)

    zeros = squares = nonsquares = 0
    for dims, terms in _strata(reduced, nvars):
        for values in _stratum_values(terms, dims, powers, p):
            z, s, n = ctx.classify(values)
            zeros, squares, nonsquares = zeros + z, squares + s, nonsquares + n

    if not model.is_double_cover:
        return PointCountRecord(p=p, count=zeros, zeros=zeros, good_reduction=good)

    if zeros + squares + nonsquares != projective_size(nvars - 1, p):
        raise CountError(f"{model.name}: stratum sizes do not add up at p={p}")
    return PointCountRecord(
        p=p,
        count=zeros + 2 * squares,
        zeros=zeros,
        squares=squares,
        nonsquares=nonsquares,
        good_reduction=good,
    )


def count_range(
    model: VarietyModel, bound: int, jobs: Optional[int] = None
) -> List[PointCountRecord]:
    """Counts for every odd prime p <= bound, ordered by p."""
    primes = [int(p) for p in primerange(3, bound + 1)]
    if not primes:
        return []
    jobs = jobs if jobs is not None else settings.counting.jobs
    jobs = max(1, min(jobs, len(primes)))

    start = time.time()
    if jobs == 1:
        records = [count_points(model, p) for p in primes]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            records = list(executor.map(partial(count_points, model), primes))
    log_performance(
        f"count_range {model.name}",
        time.time() - start,
        {"bound": bound, "primes": len(primes), "jobs": jobs},
    )
    return records


def residue_report(
    records: Iterable[PointCountRecord], convention: Convention
) -> List[Tuple[int, int]]:
    return [(record.p, record.residue(convention)) for record in records]


def restrict_primes(
    records: Iterable[PointCountRecord], modulus: int, residues: Iterable[int]
) -> List[PointCountRecord]:
    """Records whose prime lies in the given classes mod ``modulus``."""
    if modulus < 1:
        raise CountError(f"modulus must be positive, got {modulus}")
    classes = {r % modulus for r in residues}
    return [record for record in records if record.p % modulus in classes]


def compare_counts_mod_p(
    records_a: Iterable[PointCountRecord], records_b: Iterable[PointCountRecord]
) -> List[Dict[str, object]]:
    """Per common prime, whether the two counts agree mod p."""
    by_prime = {record.p: record for record in records_b}
    rows = []
    for record in records_a:
        other = by_prime.get(record.p)
        if other is None:
            continue
        rows.append(
            {
                "p": record.p,
                "count_a": record.count,
                "count_b": other.count,
                "congruent": (record.count - other.count) % record.p == 0,
            }
        )
    return rows