"""Minors of the generic ℓ×ℓ' matrix X and their evaluation."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Optional, Sequence

import numpy as np

from affgrass.errors import DomainViolation, ShapeMismatch
from affgrass.field import FieldSpec, fq_inv, fq_mul, fq_neg, fq_sub
from affgrass.grassmann.params import CodeParams
from affgrass.grassmann.points import MatrixPoint


@dataclass(frozen=True, order=True)
class MinorIndex:
    """Row/column subsets (1-based, strictly increasing) of X; () × () is the constant 1."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != len(self.cols):
            raise ShapeMismatch(f"minor needs |rows| = |cols|, got {self.rows} x {self.cols}")
        for seq in (self.rows, self.cols):
            if any(a >= b for a, b in zip(seq, seq[1:])) or any(i < 1 for i in seq):
                raise ShapeMismatch(f"minor indices must be increasing and 1-based: {seq}")

    @property
    def degree(self) -> int:
        return len(self.rows)

    @property
    def label(self) -> str:
        if self.degree == 0:
            return "1"
        if self.degree == 1:
            return f"X{self.rows[0]}{self.cols[0]}"
        rows = ",".join(map(str, self.rows))
        cols = ",".join(map(str, self.cols))
        return f"[{rows}|{cols}]"

    def fits(self, l: int, lp: int) -> bool:
        return all(i <= l for i in self.rows) and all(j <= lp for j in self.cols)


def variable(i: int, j: int) -> MinorIndex:
    return MinorIndex((i,), (j,))


def leading_principal(t: int) -> MinorIndex:
    return MinorIndex(tuple(range(1, t + 1)), tuple(range(1, t + 1)))


@lru_cache(maxsize=64)
def minor_basis(params: CodeParams) -> tuple[MinorIndex, ...]:
    """N_1..N_{k_h}: degree ≥ 2 minors first, then X_{ℓℓ'}..X_{11}, then 1."""
    l, lp = params.l, params.lp
    higher = [
        MinorIndex(rows, cols)
        for t in range(params.h, 1, -1)
        for rows in combinations(range(1, l + 1), t)
        for cols in combinations(range(1, lp + 1), t)
    ]
    linear = [variable(i, j) for i in range(l, 0, -1) for j in range(lp, 0, -1)]
    basis = tuple(higher + linear + [MinorIndex((), ())])
    assert len(basis) == params.k
    return basis


def basis_position(minor: MinorIndex, params: CodeParams) -> int:
    """0-based row of ``minor`` in the generator matrix."""
    return minor_basis(params).index(minor)


# ---------------------------------------------------------------- evaluation


def _determinant(matrix: list[list[int]], F: FieldSpec) -> int:
    size = len(matrix)
    rows = [list(row) for row in matrix]
    det = 1
    for c in range(size):
        pivot = next((r for r in range(c, size) if rows[r][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = fq_neg(det, F)
        det = fq_mul(det, rows[c][c], F)
        inv = fq_inv(rows[c][c], F)
        for r in range(c + 1, size):
            factor = fq_mul(rows[r][c], inv, F)
            if factor == 0:
                continue
            rows[r] = [fq_sub(a, fq_mul(factor, b, F), F) for a, b in zip(rows[r], rows[c])]
    return det


def evaluate_minor(minor: MinorIndex, point: MatrixPoint, F: FieldSpec) -> int:
    l, lp = point.shape
    if not minor.fits(l, lp):
        raise ShapeMismatch(f"minor {minor.label} does not fit a {l}x{lp} point")
    if minor.degree == 0:
        return 1
    sub = [[point.entries[i - 1][j - 1] for j in minor.cols] for i in minor.rows]
    return _determinant(sub, F)


@lru_cache(maxsize=None)
def _signed_permutations(t: int) -> tuple[tuple[tuple[int, ...], bool], ...]:
    out = []
    for perm in permutations(range(t)):
        inversions = sum(1 for a in range(t) for b in range(a + 1, t) if perm[a] > perm[b])
        out.append((perm, inversions % 2 == 1))
    return tuple(out)


def minor_values(minor: MinorIndex, block: np.ndarray, F: FieldSpec) -> np.ndarray:
    """Values of ``minor`` at every point of a (N, ℓ, ℓ') block (Leibniz expansion)."""
    count = block.shape[0]
    if not minor.fits(block.shape[1], block.shape[2]):
        raise ShapeMismatch(f"minor {minor.label} does not fit the point block")
    if minor.degree == 0:
        return np.ones(count, dtype=F.dtype)
    rows = [i - 1 for i in minor.rows]
    cols = [j - 1 for j in minor.cols]
    sub = block[:, rows][:, :, cols]
    total = np.zeros(count, dtype=F.dtype)
    for perm, odd in _signed_permutations(minor.degree):
        term = sub[:, 0, perm[0]]
        for i in range(1, minor.degree):
            term = F.mul_array(term, sub[:, i, perm[i]])
        if odd:
            term = F.neg_array(term)
        total = F.add_array(total, term)
    return total


# ------------------------------------------------------------- close families


def _choose_y(
    params: CodeParams,
    width: int,
    rows: Optional[Sequence[int]],
    cols: Optional[Sequence[int]],
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    y_rows = tuple(rows) if rows is not None else tuple(range(1, params.h + 1))
    y_cols = tuple(cols) if cols is not None else tuple(range(1, width + 1))
    if len(y_rows) != params.h or len(y_cols) != width:
        raise ShapeMismatch(f"Y must be {params.h}x{width}, got {len(y_rows)}x{len(y_cols)}")
    for seq, bound in ((y_rows, params.l), (y_cols, params.lp)):
        if any(a >= b for a, b in zip(seq, seq[1:])) or seq[0] < 1 or seq[-1] > bound:
            raise ShapeMismatch(f"Y index set {seq} is not an increasing subset of 1..{bound}")
    return y_rows, y_cols


def lemma_family_A(
    params: CodeParams,
    r: int,
    rows: Optional[Sequence[int]] = None,
    cols: Optional[Sequence[int]] = None,
) -> list[MinorIndex]:
    """First h−1 columns of an h×(h+r−1) submatrix Y plus its (h+j−1)-th column."""
    h = params.h
    if not 1 <= r <= params.lp - h + 1:
        raise DomainViolation(f"family A needs 1 <= r <= l'-h+1 = {params.lp - h + 1}, got {r}")
    y_rows, y_cols = _choose_y(params, h + r - 1, rows, cols)
    fixed = y_cols[: h - 1]
    return [MinorIndex(y_rows, fixed + (y_cols[h + j - 2],)) for j in range(1, r + 1)]


def lemma_family_B(
    params: CodeParams,
    r: int,
    rows: Optional[Sequence[int]] = None,
    cols: Optional[Sequence[int]] = None,
) -> list[MinorIndex]:
    """h×h minors of an h×(h+1) submatrix Y omitting its (h−r+j+1)-th column."""
    h = params.h
    if h >= params.lp:
        raise DomainViolation(f"family B needs h < l', got h={h}, l'={params.lp}")
    if not 1 <= r <= h + 1:
        raise DomainViolation(f"family B needs 1 <= r <= h+1 = {h + 1}, got {r}")
    y_rows, y_cols = _choose_y(params, h + 1, rows, cols)
    family = []
    for j in range(1, r + 1):
        omit = h - r + j  # 0-based position of column h−r+j+1
        family.append(MinorIndex(y_rows, y_cols[:omit] + y_cols[omit + 1 :]))
    return family
