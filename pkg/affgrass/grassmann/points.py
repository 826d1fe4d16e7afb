"""The point space A^δ: ℓ×ℓ' matrices listed row-major, X11 most significant."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from affgrass.errors import OutOfRange, ShapeMismatch
from affgrass.grassmann.params import CodeParams


@dataclass(frozen=True)
class MatrixPoint:
    entries: tuple[tuple[int, ...], ...]
    index: int

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0]) if self.entries else 0

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)


def point_from_index(idx: int, params: CodeParams) -> MatrixPoint:
    idx = int(idx)
    if not 0 <= idx < params.n:
        raise OutOfRange(f"point index {idx} outside 0..{params.n - 1}")
    digits = [0] * params.delta
    rest = idx
    for pos in range(params.delta - 1, -1, -1):
        rest, digits[pos] = divmod(rest, params.q)
    entries = tuple(
        tuple(digits[i * params.lp : (i + 1) * params.lp]) for i in range(params.l)
    )
    return MatrixPoint(entries=entries, index=idx)


def index_of_point(entries: MatrixPoint | Sequence[Sequence[int]], params: CodeParams) -> int:
    if isinstance(entries, MatrixPoint):
        entries = entries.entries
    rows = [list(row) for row in entries]
    if len(rows) != params.l or any(len(row) != params.lp for row in rows):
        raise ShapeMismatch(f"expected a {params.l}x{params.lp} matrix")
    idx = 0
    for row in rows:
        for value in row:
            if not 0 <= int(value) < params.q:
                raise OutOfRange(f"{value} is not an element of GF({params.q})")
            idx = idx * params.q + int(value)
    return idx


def points_block(params: CodeParams, start: int, stop: int) -> np.ndarray:
    """Points start..stop-1 as an array of shape (stop-start, ℓ, ℓ')."""
    if not 0 <= start <= stop <= params.n:
        raise OutOfRange(f"block {start}..{stop} outside 0..{params.n}")
    idx = np.arange(start, stop, dtype=np.int64)
    block = np.empty((stop - start, params.delta), dtype=params.field.dtype)
    place = 1
    for pos in range(params.delta - 1, -1, -1):
        block[:, pos] = (idx // place) % params.q
        place *= params.q
    return block.reshape(stop - start, params.l, params.lp)


def iter_point_blocks(params: CodeParams, chunk: int = 2 ** 16) -> Iterator[tuple[int, np.ndarray]]:
    chunk = max(1, int(chunk))
    for start in range(0, params.n, chunk):
        stop = min(params.n, start + chunk)
        yield start, points_block(params, start, stop)
