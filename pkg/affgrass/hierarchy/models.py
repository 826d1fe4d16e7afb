from __future__ import annotations

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, model_validator


class EntryStatus(str, Enum):
    EXACT = "exact"
    FORMULA = "formula"
    UNKNOWN = "unknown"


class WeightHierarchy(BaseModel):
    """d_0..d_k of an [n, k] code; entries may be exact, formula-derived or unknown."""

    n: int
    k: int
    d: list[Optional[int]]
    status: list[EntryStatus] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_shape(self) -> "WeightHierarchy":
        if len(self.d) != self.k + 1:
            raise ValueError(f"hierarchy of a {self.k}-dim code needs {self.k + 1} entries, got {len(self.d)}")
        if self.d[0] not in (0, None):
            raise ValueError("d_0 must be 0")
        self.d[0] = 0
        if not self.status:
            self.status = [EntryStatus.EXACT if v is not None else EntryStatus.UNKNOWN for v in self.d]
        if len(self.status) != len(self.d):
            raise ValueError("status list must match the entries")
        self.status[0] = EntryStatus.EXACT
        return self

    @classmethod
    def exact(cls, n: int, values: list[int]) -> "WeightHierarchy":
        """From d_1..d_k, all exact."""
        return cls(n=n, k=len(values), d=[0, *values])

    @property
    def complete(self) -> bool:
        return all(v is not None for v in self.d)

    @property
    def e(self) -> list[Optional[int]]:
        return [None if v is None else v - j for j, v in enumerate(self.d)]

    @property
    def f(self) -> list[Optional[int]]:
        out: list[Optional[int]] = []
        for j in range(self.k + 1):
            v = self.d[self.k - j]
            out.append(None if v is None else self.n - j - v)
        return out

    def known(self) -> dict[int, int]:
        return {r: v for r, v in enumerate(self.d) if v is not None}

    def merge(self, other: "WeightHierarchy") -> "WeightHierarchy":
        """Fill unknown entries from ``other``; exact entries always win."""
        if (other.n, other.k) != (self.n, self.k):
            raise ValueError("cannot merge hierarchies of different codes")
        d = list(self.d)
        status = list(self.status)
        for r in range(self.k + 1):
            if status[r] == EntryStatus.EXACT:
                continue
            if other.status[r] == EntryStatus.EXACT or (d[r] is None and other.d[r] is not None):
                d[r] = other.d[r]
                status[r] = other.status[r]
        return WeightHierarchy(n=self.n, k=self.k, d=d, status=status)
