from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Any

from affgrass.errors import BadShape, LengthOverflow
from affgrass.field import FieldSpec, field_from_order

# largest length addressable by a signed 64-bit point index
MAX_LENGTH = 2 ** 63 - 1


@dataclass(frozen=True)
class CodeParams:
    """Parameters of C^A(ℓ, m; h) and the constants derived from them."""

    q: int
    l: int
    lp: int
    h: int
    m: int
    delta: int
    n: int
    k: int
    mu_prime: int
    mu: int

    @property
    def field(self) -> FieldSpec:
        return field_from_order(self.q)

    @property
    def label(self) -> str:
        return f"C^A({self.l},{self.m};{self.h}) over GF({self.q})"

    def to_dict(self) -> dict[str, Any]:
        return {
            "q": self.q,
            "l": self.l,
            "lp": self.lp,
            "h": self.h,
            "m": self.m,
            "delta": self.delta,
            "n": self.n,
            "k": self.k,
            "mu_prime": self.mu_prime,
            "mu": self.mu,
        }


def dimension(l: int, lp: int, h: int) -> int:
    return sum(comb(l, i) * comb(lp, i) for i in range(h + 1))


def code_params(q: int, l: int, lp: int, h: int) -> CodeParams:
    field_from_order(q)
    if not (1 <= h <= l <= lp):
        raise BadShape(f"need 1 <= h <= l <= l', got h={h}, l={l}, l'={lp}")
    delta = l * lp
    n = q ** delta
    if n > MAX_LENGTH:
        raise LengthOverflow(f"length q^delta = {q}^{delta} exceeds {MAX_LENGTH}")
    return CodeParams(
        q=q,
        l=l,
        lp=lp,
        h=h,
        m=l + lp,
        delta=delta,
        n=n,
        k=dimension(l, lp, h),
        mu_prime=1 + max(l, lp - l),
        mu=lp + 1,
    )
