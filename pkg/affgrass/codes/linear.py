from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional, Sequence

import numpy as np

from affgrass.codes.linalg import as_matrix, rref
from affgrass.errors import LengthMismatch, RankDeficient
from affgrass.field import FieldSpec
from affgrass.grassmann.params import CodeParams


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A k×n generator matrix over GF(q) of full row rank."""

    field: FieldSpec
    generator: np.ndarray
    params: Optional[CodeParams] = None
    tag: str = "custom"

    @property
    def length(self) -> int:
        return int(self.generator.shape[1])

    @property
    def dimension(self) -> int:
        return int(self.generator.shape[0])

    @property
    def n(self) -> int:
        return self.length

    @property
    def k(self) -> int:
        return self.dimension

    @classmethod
    def from_generator(
        cls,
        F: FieldSpec,
        matrix,
        *,
        length: Optional[int] = None,
        params: Optional[CodeParams] = None,
        tag: str = "custom",
        check_rank: bool = True,
    ) -> "LinearCode":
        G = as_matrix(matrix, F, length)
        if check_rank and G.shape[0]:
            found = rref(G, F)[1]
            if found != G.shape[0]:
                raise RankDeficient(f"generator has {G.shape[0]} rows but rank {found}")
        G.setflags(write=False)
        return cls(field=F, generator=G, params=params, tag=tag)

    def describe(self) -> dict[str, Any]:
        out: dict[str, Any] = {"q": self.field.order, "n": self.length, "k": self.dimension, "tag": self.tag}
        if self.params is not None:
            out["params"] = self.params.to_dict()
        return out


@dataclass(frozen=True, eq=False)
class Subcode:
    """An r-dimensional subcode given by RREF coefficients over the parent basis."""

    coeffs: np.ndarray
    pivots: tuple[int, ...]
    parent_dimension: int

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @classmethod
    def from_rows(cls, rows, F: FieldSpec, parent_dimension: int) -> "Subcode":
        A = as_matrix(rows, F, parent_dimension)
        if A.shape[1] != parent_dimension:
            raise LengthMismatch(f"coefficient rows need length {parent_dimension}, got {A.shape[1]}")
        reduced, r, pivots = rref(A, F)
        coeffs = reduced[:r].copy()
        coeffs.setflags(write=False)
        return cls(coeffs=coeffs, pivots=tuple(pivots), parent_dimension=parent_dimension)

    @classmethod
    def span_of_positions(cls, positions: Sequence[int], F: FieldSpec, parent_dimension: int) -> "Subcode":
        rows = np.zeros((len(positions), parent_dimension), dtype=F.dtype)
        for i, pos in enumerate(positions):
            rows[i, pos] = 1
        return cls.from_rows(rows, F, parent_dimension)

    def key(self) -> tuple:
        return (self.pivots, self.coeffs.tobytes())

    def to_dict(self) -> dict[str, Any]:
        return {"pivots": list(self.pivots), "rows": self.coeffs.astype(int).tolist()}


def encode(coeffs: Sequence[int], code: LinearCode) -> np.ndarray:
    vec = np.asarray(coeffs)
    if vec.ndim != 1 or vec.shape[0] != code.dimension:
        raise LengthMismatch(f"message needs length {code.dimension}, got {vec.shape}")
    F = code.field
    return F.matmul(F.asarray(vec)[None, :], code.generator)[0]


def hamming_weight(codeword) -> int:
    return int(np.count_nonzero(np.asarray(codeword)))


def codewords_of(code: LinearCode, D: Subcode) -> np.ndarray:
    if D.parent_dimension != code.dimension:
        raise LengthMismatch(f"subcode of a {D.parent_dimension}-dim code used with k={code.dimension}")
    return code.field.matmul(D.coeffs, code.generator)


def support_weight(code: LinearCode, D: Subcode) -> int:
    """|Supp(D)|: the union of the supports of D's basis codewords."""
    if D.rank == 0:
        return 0
    return int(codewords_of(code, D).any(axis=0).sum())
