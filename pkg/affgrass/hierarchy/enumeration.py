"""Canonical enumeration of r-dimensional subspaces of GF(q)^k.

Each subspace is produced once, as its reduced row-echelon basis.  Subspaces
are ordered by pivot pattern (lexicographic), then by the free entries read
row by row, earlier rows and earlier columns being more significant.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Iterator, Optional

import numpy as np
from loguru import logger

from affgrass.codes.linear import Subcode
from affgrass.errors import BudgetExceeded, OutOfRange
from affgrass.field import FieldSpec

DEFAULT_SUBSPACE_BUDGET = 10 ** 7


def gaussian_binomial(k: int, r: int, q: int) -> int:
    if r < 0 or r > k:
        return 0
    num = 1
    den = 1
    for i in range(r):
        num *= q ** (k - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@dataclass(frozen=True)
class PivotPattern:
    """One pivot pattern together with its free columns per row."""

    pivots: tuple[int, ...]
    free: tuple[tuple[int, ...], ...]
    offset: int
    q: int

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(self.q ** len(cols) for cols in self.free)

    @property
    def count(self) -> int:
        return prod(self.sizes)

    def row_digits(self, row: int, values: np.ndarray) -> np.ndarray:
        """Free-entry digits (earlier column most significant) for row candidates."""
        width = len(self.free[row])
        values = np.asarray(values, dtype=np.int64)
        powers = self.q ** np.arange(width - 1, -1, -1, dtype=np.int64)
        return (values[:, None] // powers[None, :]) % self.q

    def coefficients(self, values: tuple[int, ...], k: int, F: FieldSpec) -> np.ndarray:
        """RREF coefficient matrix for per-row candidate values."""
        rows = np.zeros((self.rank, k), dtype=F.dtype)
        for i, (pivot, cols) in enumerate(zip(self.pivots, self.free)):
            rows[i, pivot] = 1
            if cols:
                rows[i, list(cols)] = self.row_digits(i, np.array([values[i]]))[0]
        return rows

    def local_index(self, values: tuple[int, ...]) -> int:
        index = 0
        for value, size in zip(values, self.sizes):
            index = index * size + int(value)
        return index


def pivot_patterns(k: int, r: int, q: int) -> list[PivotPattern]:
    patterns = []
    offset = 0
    for pivots in combinations(range(k), r):
        chosen = set(pivots)
        free = tuple(
            tuple(c for c in range(p + 1, k) if c not in chosen)
            for p in pivots
        )
        pattern = PivotPattern(pivots=pivots, free=free, offset=offset, q=q)
        patterns.append(pattern)
        offset += pattern.count
    return patterns


def check_subspace_budget(k: int, r: int, q: int, budget: Optional[int]) -> int:
    budget = DEFAULT_SUBSPACE_BUDGET if budget is None else int(budget)
    total = gaussian_binomial(k, r, q)
    if total > budget:
        raise BudgetExceeded(f"{r}-dimensional subspaces of GF({q})^{k}", total, budget)
    return total


def enumerate_subspaces(
    k: int,
    r: int,
    F: FieldSpec,
    budget: Optional[int] = None,
) -> Iterator[Subcode]:
    if not 0 <= r <= k:
        raise OutOfRange(f"subspace dimension must lie in 0..{k}, got {r}")
    total = check_subspace_budget(k, r, F.order, budget)
    logger.debug(f"enumerating {total} subspaces of dimension {r} in GF({F.order})^{k}")
    return _walk(k, r, F)


def _walk(k: int, r: int, F: FieldSpec) -> Iterator[Subcode]:
    for pattern in pivot_patterns(k, r, F.order):
        for values in np.ndindex(*pattern.sizes):
            coeffs = pattern.coefficients(values, k, F)
            coeffs.setflags(write=False)
            yield Subcode(coeffs=coeffs, pivots=pattern.pivots, parent_dimension=k)
