"""Row reduction and null spaces over GF(q)."""

from __future__ import annotations

import numpy as np

from affgrass.field import FieldSpec, fq_inv


def as_matrix(matrix, F: FieldSpec, ncols: int | None = None) -> np.ndarray:
    arr = np.asarray(matrix)
    if arr.size == 0:
        width = ncols if ncols is not None else (arr.shape[-1] if arr.ndim == 2 else 0)
        return np.zeros((0, width), dtype=F.dtype)
    return F.asarray(np.atleast_2d(arr))


def rref(matrix, F: FieldSpec) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row-echelon form, rank and strictly increasing pivot columns."""
    A = as_matrix(matrix, F).copy()
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nonzero = np.flatnonzero(A[r:, c])
        if nonzero.size == 0:
            continue
        p = r + int(nonzero[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] = F.mul_array(A[r], fq_inv(int(A[r, c]), F))
        factors = A[:, c].copy()
        factors[r] = 0
        targets = np.flatnonzero(factors)
        if targets.size:
            update = F.mul_array(factors[targets, None], A[r][None, :])
            A[targets] = F.add_array(A[targets], F.neg_array(update))
        pivots.append(c)
        r += 1
    return A, r, pivots


def rank(matrix, F: FieldSpec) -> int:
    return rref(matrix, F)[1]


def null_space(matrix, F: FieldSpec, ncols: int | None = None) -> np.ndarray:
    """RREF basis of {x : matrix · x = 0}."""
    A = as_matrix(matrix, F, ncols)
    width = A.shape[1]
    reduced, r, pivots = rref(A, F)
    free = [c for c in range(width) if c not in set(pivots)]
    basis = np.zeros((len(free), width), dtype=F.dtype)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for i, p in enumerate(pivots):
            basis[row, p] = F.neg_array(reduced[i, f])
    return rref(basis, F)[0] if len(free) else basis


def row_spaces_equal(a, b, F: FieldSpec) -> bool:
    ra, ka, _ = rref(a, F)
    rb, kb, _ = rref(b, F)
    return ka == kb and np.array_equal(ra[:ka], rb[:kb])
