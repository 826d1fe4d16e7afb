"""Structural checks on (partially known) weight hierarchies."""

from __future__ import annotations

from dataclasses import dataclass

from affgrass.formulas.weights import (
    griesmer_wei,
    initial_domain,
    initial_dr_formula,
    terminal_domain,
    terminal_dr_formula,
)
from affgrass.grassmann.params import CodeParams
from affgrass.hierarchy.models import EntryStatus, WeightHierarchy


@dataclass(frozen=True)
class BoundViolation:
    name: str
    r: int
    s: int
    bound: int
    actual: int

    def __str__(self) -> str:
        return f"{self.name}: d_{self.s} = {self.actual} < {self.bound} (from r={self.r})"


def check_monotone(hierarchy: WeightHierarchy) -> list[BoundViolation]:
    """Strict growth d_r < d_s for every known pair r < s."""
    known = sorted(hierarchy.known().items())
    out = []
    for (r, dr), (s, ds) in zip(known, known[1:]):
        if ds <= dr:
            out.append(BoundViolation("monotone", r, s, dr + 1, ds))
    return out


def tsfasman_vladut_check(hierarchy: WeightHierarchy, q: int) -> list[BoundViolation]:
    """d_s ≥ d_r + Σ_{i=1}^{s−r} ⌈(q−1)d_r / ((q^r−1)q^i)⌉ for all known 1 ≤ r ≤ s."""
    known = hierarchy.known()
    out = []
    for r, dr in sorted(known.items()):
        if r == 0:
            continue
        for s, ds in sorted(known.items()):
            if s < r:
                continue
            bound = dr + sum(-(-(q - 1) * dr // ((q ** r - 1) * q ** i)) for i in range(1, s - r + 1))
            if ds < bound:
                out.append(BoundViolation("tsfasman-vladut", r, s, bound, ds))
    return out


def griesmer_wei_check(hierarchy: WeightHierarchy, q: int) -> list[BoundViolation]:
    known = hierarchy.known()
    d1 = known.get(1)
    if not d1:
        return []
    out = []
    for r, dr in sorted(known.items()):
        bound = griesmer_wei(d1, r, q)
        if r and dr < bound:
            out.append(BoundViolation("griesmer-wei", 1, r, bound, dr))
    return out


def formula_hierarchy(params: CodeParams) -> WeightHierarchy:
    """Every entry a closed form determines; the rest stay unknown."""
    d: list = [None] * (params.k + 1)
    for r in initial_domain(params):
        if r <= params.k:
            d[r] = initial_dr_formula(params, r)
    for r in terminal_domain(params):
        d[params.k - r] = terminal_dr_formula(params, r)
    d[0] = 0
    status = [EntryStatus.FORMULA if v is not None else EntryStatus.UNKNOWN for v in d]
    status[0] = EntryStatus.EXACT
    return WeightHierarchy(n=params.n, k=params.k, d=d, status=status)
