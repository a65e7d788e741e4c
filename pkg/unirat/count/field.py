"""
Prime-field contexts with a precomputed quadratic-character table.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet

import numpy as np
from sympy import isprime

from ..utils import UniratError

ZERO, SQUARE, NONSQUARE = 0, 1, -1


class CountError(UniratError):
    """Point counting cannot be carried out for this model or prime."""


@dataclass(frozen=True, eq=False)
class PrimeFieldCtx:
    """An odd prime and the table square_flags[a] = Legendre symbol (a/p)."""

    p: int
    square_flags: np.ndarray

    def flag(self, a: int) -> int:
        return int(self.square_flags[a % self.p])

    @property
    def nonzero_squares(self) -> FrozenSet[int]:
        return frozenset(int(a) for a in np.flatnonzero(self.square_flags == SQUARE))

    def classify(self, values: np.ndarray):
        """Counts of (zeros, nonzero squares, non-squares) among reduced values."""
        flags = self.square_flags[values]
        zeros = int(np.count_nonzero(flags == ZERO))
        squares = int(np.count_nonzero(flags == SQUARE))
        return zeros, squares, int(flags.size) - zeros - squares


@lru_cache(maxsize=256)
def make_ctx(p: int) -> PrimeFieldCtx:
    if p == 2 or not isprime(p):
        raise CountError(f"{p} is not an odd prime")
    flags = np.full(p, NONSQUARE, dtype=np.int8)
    residues = np.arange(1, p, dtype=np.int64)
    flags[residues * residues % p] = SQUARE
    flags[0] = ZERO
    flags.setflags(write=False)
    return PrimeFieldCtx(p, flags)


def projective_size(n: int, p: int) -> int:
    """#P^n(F_p)."""
    return (p ** (n + 1) - 1) // (p - 1)
