from __future__ import annotations

from itertools import product
from typing import Iterator

import numpy as np

from affgrass.codes import LinearCode, build_code, support_weight
from affgrass.grassmann import CodeParams, code_params
from affgrass.hierarchy import enumerate_subspaces


def make_params(q: int = 2, l: int = 1, lp: int = 2, h: int = 1) -> CodeParams:
    return code_params(q, l, lp, h)


def make_code(q: int = 2, l: int = 1, lp: int = 2, h: int = 1) -> LinearCode:
    return build_code(code_params(q, l, lp, h))


def all_messages(k: int, q: int) -> Iterator[tuple[int, ...]]:
    yield from product(range(q), repeat=k)


def naive_weight_distribution(code: LinearCode) -> dict[int, int]:
    """Weight -> number of codewords, by encoding every message."""
    F = code.field
    out: dict[int, int] = {}
    for message in all_messages(code.dimension, F.order):
        word = F.matmul(np.array([message]), code.generator)[0]
        weight = int(np.count_nonzero(word))
        out[weight] = out.get(weight, 0) + 1
    return out


def naive_dr(code: LinearCode, r: int) -> int:
    """d_r by walking every r-dimensional subspace one at a time."""
    return min(
        support_weight(code, D)
        for D in enumerate_subspaces(code.dimension, r, code.field)
    )
