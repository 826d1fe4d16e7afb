"""Exhaustive counts over the point space."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np
from loguru import logger

from affgrass.errors import BudgetExceeded, LengthMismatch
from affgrass.grassmann.minors import MinorIndex, minor_basis, minor_values
from affgrass.grassmann.params import CodeParams
from affgrass.grassmann.points import iter_point_blocks, points_block

DEFAULT_POINT_BUDGET = 2 ** 24
DEFAULT_CHUNK = 2 ** 16


def check_point_budget(params: CodeParams, budget: Optional[int]) -> None:
    budget = DEFAULT_POINT_BUDGET if budget is None else int(budget)
    if params.n > budget:
        raise BudgetExceeded(f"points of {params.label}", params.n, budget)


@lru_cache(maxsize=4096)
def _nonzero_mask(minor: MinorIndex, params: CodeParams) -> np.ndarray:
    block = points_block(params, 0, params.n)
    mask = minor_values(minor, block, params.field) != 0
    mask.setflags(write=False)
    return mask


def nonvanishing_mask(minor: MinorIndex, params: CodeParams) -> np.ndarray:
    """Boolean mask over all n points; cached for lengths up to one chunk."""
    if params.n <= DEFAULT_CHUNK:
        return _nonzero_mask(minor, params)
    block = points_block(params, 0, params.n)
    return minor_values(minor, block, params.field) != 0


def count_nonvanishing(
    minors: Sequence[MinorIndex],
    params: CodeParams,
    budget: Optional[int] = None,
    chunk: int = DEFAULT_CHUNK,
) -> int:
    """Number of points where every listed minor is nonzero."""
    check_point_budget(params, budget)
    minors = list(minors)
    if params.n <= min(chunk, DEFAULT_CHUNK):
        mask = np.ones(params.n, dtype=bool)
        for minor in minors:
            mask &= _nonzero_mask(minor, params)
        return int(mask.sum())
    F = params.field
    total = 0
    for _start, block in iter_point_blocks(params, chunk):
        mask = np.ones(block.shape[0], dtype=bool)
        for minor in minors:
            mask &= minor_values(minor, block, F) != 0
        total += int(mask.sum())
    return total


def polynomial_values(coeffs: np.ndarray, block: np.ndarray, params: CodeParams) -> np.ndarray:
    """Values of Σ_i c_i N_i for each coefficient row, shape (rows, N)."""
    F = params.field
    coeffs = np.atleast_2d(np.asarray(coeffs))
    basis = minor_basis(params)
    if coeffs.shape[1] != len(basis):
        raise LengthMismatch(f"coefficient rows need length {len(basis)}, got {coeffs.shape[1]}")
    out = np.zeros((coeffs.shape[0], block.shape[0]), dtype=F.dtype)
    for pos in np.flatnonzero(coeffs.any(axis=0)):
        values = minor_values(basis[pos], block, F)
        out = F.add_array(out, F.mul_array(coeffs[:, pos : pos + 1], values[None, :]))
    return out


def count_common_zeros(
    coeffs: np.ndarray,
    params: CodeParams,
    budget: Optional[int] = None,
    chunk: int = DEFAULT_CHUNK,
) -> int:
    """Points where every polynomial given by a coefficient row vanishes."""
    check_point_budget(params, budget)
    coeffs = np.atleast_2d(np.asarray(coeffs))
    total = 0
    for _start, block in iter_point_blocks(params, chunk):
        if coeffs.shape[0] == 0:
            total += block.shape[0]
            continue
        values = polynomial_values(coeffs, block, params)
        total += int((~values.any(axis=0)).sum())
    logger.debug(f"{params.label}: {total} common zeros of {coeffs.shape[0]} polynomials")
    return total


def subfamilies(family: Sequence[MinorIndex]) -> Iterable[tuple[MinorIndex, ...]]:
    for s in range(1, len(family) + 1):
        yield from combinations(family, s)
