"""Affine Grassmann codes via the evaluation map, and duals."""

from __future__ import annotations

from typing import Optional

import numpy as np
from loguru import logger

from affgrass.codes.linalg import null_space, rref
from affgrass.codes.linear import LinearCode
from affgrass.errors import RankDeficient
from affgrass.grassmann.counting import DEFAULT_CHUNK, check_point_budget
from affgrass.grassmann.minors import minor_basis, minor_values
from affgrass.grassmann.params import CodeParams
from affgrass.grassmann.points import iter_point_blocks

_SAMPLE_SEED = 20150101


def evaluation_matrix(params: CodeParams, chunk: int = DEFAULT_CHUNK) -> np.ndarray:
    F = params.field
    basis = minor_basis(params)
    G = np.zeros((params.k, params.n), dtype=F.dtype)
    for start, block in iter_point_blocks(params, chunk):
        stop = start + block.shape[0]
        for row, minor in enumerate(basis):
            G[row, start:stop] = minor_values(minor, block, F)
    return G


def _full_rank(G: np.ndarray, params: CodeParams) -> bool:
    F = params.field
    k, n = G.shape
    sample = min(n, 16 * k + 64)
    if sample < n:
        cols = np.sort(np.random.default_rng(_SAMPLE_SEED).choice(n, size=sample, replace=False))
        if rref(G[:, cols], F)[1] == k:
            return True
    return rref(G, F)[1] == k


def build_code(params: CodeParams, budget: Optional[int] = None, chunk: int = DEFAULT_CHUNK) -> LinearCode:
    """C^A(ℓ, m; h): row i evaluates N_i at P_0..P_{n-1}."""
    check_point_budget(params, budget)
    G = evaluation_matrix(params, chunk)
    if not _full_rank(G, params):
        raise RankDeficient(f"{params.label}: evaluated minors are not independent")
    logger.debug(f"built {params.label}: generator {G.shape[0]}x{G.shape[1]}")
    G.setflags(write=False)
    return LinearCode(field=params.field, generator=G, params=params, tag="affine-grassmann")


def dual_code(code: LinearCode) -> LinearCode:
    basis = null_space(code.generator, code.field, code.length)
    logger.debug(f"dual of [{code.length},{code.dimension}] has dimension {basis.shape[0]}")
    return LinearCode.from_generator(
        code.field,
        basis,
        length=code.length,
        params=code.params,
        tag="dual",
        check_rank=False,
    )
