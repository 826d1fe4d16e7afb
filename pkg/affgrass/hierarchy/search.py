"""Exact higher weights by exhaustive search over canonical subspaces.

Every pivot pattern is an independent work unit.  Inside a unit the first
row's candidates are evaluated as one vectorized block while the remaining
rows are walked depth-first, carrying the packed union of their supports;
a branch is dropped once that union alone is heavier than the best weight
seen so far.
"""

from __future__ import annotations

from dataclasses import dataclass
from multiprocessing import Pool
from typing import Optional

import numpy as np
from loguru import logger

from affgrass.codes.linear import LinearCode, Subcode
from affgrass.errors import BudgetExceeded, OutOfRange
from affgrass.field import FieldSpec, field_from_order
from affgrass.hierarchy.enumeration import PivotPattern, check_subspace_budget, pivot_patterns
from affgrass.hierarchy.models import EntryStatus, WeightHierarchy

ROW_BLOCK = 4096
_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.int64)

Hit = tuple[int, int, PivotPattern, tuple[int, ...]]


@dataclass(frozen=True)
class SearchResult:
    r: int
    weight: int
    witness: Subcode
    index: int
    total: int


def _popcount(packed: np.ndarray) -> np.ndarray:
    return _POPCOUNT[packed].sum(axis=-1)


def _row_masks(G: np.ndarray, F: FieldSpec, pattern: PivotPattern, row: int, values: np.ndarray) -> np.ndarray:
    pivot = pattern.pivots[row]
    cols = list(pattern.free[row])
    if cols:
        digits = pattern.row_digits(row, values).astype(F.dtype)
        words = F.add_array(F.matmul(digits, G[cols]), G[pivot][None, :])
    else:
        words = np.broadcast_to(G[pivot], (len(values), G.shape[1]))
    return np.packbits(words != 0, axis=1)


def search_pattern(G: np.ndarray, F: FieldSpec, pattern: PivotPattern, bound: int) -> Optional[Hit]:
    """First minimum-weight subspace of one pattern among those of weight ≤ bound."""
    r = pattern.rank
    sizes = pattern.sizes
    tail = [_row_masks(G, F, pattern, i, np.arange(sizes[i])) for i in range(1, r)]
    nbytes = (G.shape[1] + 7) // 8
    best: Optional[tuple[int, int, tuple[int, ...]]] = None
    limit = bound

    def descend(depth: int, union: np.ndarray, chosen: tuple[int, ...]) -> None:
        nonlocal best, limit
        if depth == r:
            weights = _popcount(head | union)
            w = int(weights.min())
            if w > limit:
                return
            key = (w, int(head_values[int(np.argmax(weights == w))]), chosen)
            if best is None or key < best:
                best = key
                limit = w
            return
        unions = tail[depth - 1] | union
        weights = _popcount(unions)
        for value in np.flatnonzero(weights <= limit):
            descend(depth + 1, unions[value], chosen + (int(value),))

    for start in range(0, sizes[0], ROW_BLOCK):
        head_values = np.arange(start, min(start + ROW_BLOCK, sizes[0]))
        head = _row_masks(G, F, pattern, 0, head_values)
        descend(1, np.zeros(nbytes, dtype=np.uint8), ())

    if best is None:
        return None
    weight, first, rest = best
    values = (first, *rest)
    return weight, pattern.offset + pattern.local_index(values), pattern, values


_WORKER: dict = {}


def _init_worker(generator: np.ndarray, q: int) -> None:
    _WORKER["G"] = generator
    _WORKER["F"] = field_from_order(q)


def _run_unit(pattern: PivotPattern) -> Optional[Hit]:
    G = _WORKER["G"]
    return search_pattern(G, _WORKER["F"], pattern, G.shape[1])


def search_min_support(
    code: LinearCode,
    r: int,
    budget: Optional[int] = None,
    workers: int = 1,
) -> SearchResult:
    """d_r together with the first r-dimensional subcode attaining it."""
    k = code.dimension
    F = code.field
    if not 0 <= r <= k:
        raise OutOfRange(f"r must lie in 0..{k}, got {r}")
    if r == 0:
        zero = Subcode.from_rows(np.zeros((0, k), dtype=F.dtype), F, k)
        return SearchResult(r=0, weight=0, witness=zero, index=0, total=1)

    total = check_subspace_budget(k, r, F.order, budget)
    patterns = pivot_patterns(k, r, F.order)
    G = np.ascontiguousarray(code.generator)
    hits: list[Hit] = []
    if workers > 1 and len(patterns) > 1:
        with Pool(processes=workers, initializer=_init_worker, initargs=(G, F.order)) as pool:
            hits.extend(hit for hit in pool.imap(_run_unit, patterns) if hit is not None)
    else:
        bound = code.length
        for pattern in patterns:
            hit = search_pattern(G, F, pattern, bound)
            if hit is None:
                continue
            if hit[0] < bound:
                logger.debug(f"r={r}: weight {hit[0]} at pivots {pattern.pivots}")
            hits.append(hit)
            bound = min(bound, hit[0])

    weight, index, pattern, values = min(hits, key=lambda hit: (hit[0], hit[1]))
    coeffs = pattern.coefficients(values, k, F)
    coeffs.setflags(write=False)
    witness = Subcode(coeffs=coeffs, pivots=pattern.pivots, parent_dimension=k)
    logger.debug(f"d_{r} = {weight} over {total} subspaces ({len(patterns)} pivot patterns)")
    return SearchResult(r=r, weight=weight, witness=witness, index=index, total=total)


def exact_dr(code: LinearCode, r: int, budget: Optional[int] = None, workers: int = 1) -> int:
    return search_min_support(code, r, budget, workers).weight


def exact_hierarchy(
    code: LinearCode,
    budget: Optional[int] = None,
    workers: int = 1,
    partial: bool = False,
) -> WeightHierarchy:
    """Every d_r by exhaustive search.

    The whole range is checked against the budget first; the first infeasible
    r raises BudgetExceeded unless ``partial`` is set, in which case those
    entries are left unknown.
    """
    k = code.dimension
    feasible = []
    for r in range(k + 1):
        try:
            check_subspace_budget(k, r, code.field.order, budget)
            feasible.append(True)
        except BudgetExceeded:
            if not partial:
                raise
            feasible.append(False)
    d: list[Optional[int]] = []
    status: list[EntryStatus] = []
    for r in range(k + 1):
        if feasible[r]:
            d.append(exact_dr(code, r, budget, workers))
            status.append(EntryStatus.EXACT)
        else:
            d.append(None)
            status.append(EntryStatus.UNKNOWN)
    return WeightHierarchy(n=code.length, k=k, d=d, status=status)
