"""Weights of dual codes: Wei duality, its e/f-sequence lookups and the
closed and recursive forms for duals of affine Grassmann codes."""

from __future__ import annotations

from fractions import Fraction
from typing import Literal, Optional

from pydantic import BaseModel

from affgrass.errors import DomainViolation, IncompleteHierarchy, OutOfRange
from affgrass.formulas.bounds import formula_hierarchy
from affgrass.formulas.weights import initial_domain, min_distance_formula
from affgrass.grassmann.params import CodeParams
from affgrass.hierarchy.models import WeightHierarchy

Convention = Literal["corollary", "literal"]
DualMethod = Literal["direct-formula", "recursive", "duality-transform"]


# ------------------------------------------------------------ Wei duality


def dual_hierarchy_from_primal(hierarchy: WeightHierarchy, n: Optional[int] = None) -> WeightHierarchy:
    """{d_s(C⊥)} = {1..n} ∖ {n+1−d_r(C)}."""
    n = hierarchy.n if n is None else n
    for r, value in enumerate(hierarchy.d):
        if value is None:
            raise IncompleteHierarchy(f"primal d_{r} is unknown", index=r)
    excluded = {n + 1 - v for v in hierarchy.d[1:]}
    values = [s for s in range(1, n + 1) if s not in excluded]
    return WeightHierarchy.exact(n, values)


def dual_terminal_lookup(hierarchy: WeightHierarchy, s: int) -> int:
    """d⊥_{n−k−s} = n − s − j for the j < k with e_j ≤ s < e_{j+1}."""
    n, k = hierarchy.n, hierarchy.k
    if not 0 <= s < n - k:
        raise OutOfRange(f"s must lie in 0..{n - k - 1}, got {s}")
    e = hierarchy.e
    for j in range(k):
        if e[j] is None or e[j + 1] is None:
            continue
        if e[j] <= s < e[j + 1]:
            return n - s - j
    raise IncompleteHierarchy(f"e-sequence entries around s={s} are unknown")


def dual_initial_lookup(hierarchy: WeightHierarchy, s: int) -> int:
    """d⊥_s = s + j + 1 for the j < k with f_j < s ≤ f_{j+1}."""
    n, k = hierarchy.n, hierarchy.k
    if not 0 < s <= n - k:
        raise OutOfRange(f"s must lie in 1..{n - k}, got {s}")
    f = hierarchy.f
    for j in range(k):
        if f[j] is None or f[j + 1] is None:
            continue
        if f[j] < s <= f[j + 1]:
            return s + j + 1
    raise IncompleteHierarchy(f"f-sequence entries around s={s} are unknown")


# ------------------------------------------------- auxiliary sequences


def q_sequence(q: int, j: int) -> int:
    return q ** j - j


def g_sequence(q: int, j: int) -> Fraction:
    """G_j = Σ_{i<j} q^{−i}, with G_0 = 0."""
    return sum((Fraction(1, q ** i) for i in range(j)), Fraction(0))


def h_sequence(params: CodeParams, j: int) -> Optional[int]:
    """H_j = d·G_j − j, or None when d·G_j is not an integer."""
    value = min_distance_formula(params) * g_sequence(params.q, j) - j
    return value.numerator if value.denominator == 1 else None


def _is_power_of(value: int, q: int) -> bool:
    if value < 1:
        return False
    while value % q == 0:
        value //= q
    return value == 1


# ------------------------------------------------------- initial weights


def dual_initial_value(q: int, s: int, lp: Optional[int] = None) -> int:
    """s + j + 1 with Q_{j−1} ≤ s < Q_j.

    With ``lp`` given, s must stay below q^ℓ' − ℓ'; without it the value is the
    one every large enough ℓ' shares.
    """
    if s < 1:
        raise DomainViolation(f"dual initial weights start at s=1, got {s}")
    if lp is not None:
        if lp <= 1:
            raise DomainViolation("dual weight formulas need l' > 1")
        if s >= q_sequence(q, lp):
            raise DomainViolation(f"dual initial formula needs s < q^l' - l' = {q_sequence(q, lp)}, got s={s}")
    j = 1
    while not q_sequence(q, j - 1) <= s < q_sequence(q, j):
        j += 1
    return s + j + 1


def dual_initial_formula(params: CodeParams, s: int) -> int:
    return dual_initial_value(params.q, s, params.lp)


def recursive_initial_values(q: int, s_max: int, lp: Optional[int] = None) -> list[int]:
    """d⊥_1..d⊥_{s_max}: +2 after a power of q, +1 otherwise."""
    if lp is not None:
        if lp <= 1:
            raise DomainViolation("dual weight formulas need l' > 1")
        if not 1 <= s_max <= q_sequence(q, lp):
            raise DomainViolation(f"recursion holds for s <= q^l' - l' = {q_sequence(q, lp)}, got {s_max}")
    elif s_max < 1:
        raise DomainViolation(f"need s_max >= 1, got {s_max}")
    values = [dual_initial_value(q, 1)]
    for _ in range(2, s_max + 1):
        prev = values[-1]
        values.append(prev + 2 if _is_power_of(prev, q) else prev + 1)
    return values


def dual_recursive(params: CodeParams, s_max: int) -> list[int]:
    if s_max < 2:
        raise DomainViolation(f"dual recursion needs s_max >= 2, got {s_max}")
    return recursive_initial_values(params.q, s_max, params.lp)


# ------------------------------------------------------ terminal weights


def _terminal_limits(params: CodeParams) -> tuple[int, int]:
    """(last s of the n−s clause, last s the H-indexed clause determines)."""
    if params.lp <= 1:
        raise DomainViolation("dual weight formulas need l' > 1")
    d = min_distance_formula(params)
    first = d - 2
    if params.h >= params.lp:
        return first, first
    l, lp = params.l, params.lp
    stated = max(v for v in (h_sequence(params, l), h_sequence(params, lp - l), 0) if v is not None)
    jmax = initial_domain(params).stop - 1
    known = h_sequence(params, jmax)
    last = stated if known is None else min(stated, known - 1)
    return first, max(first, last)


def dual_terminal_domain(params: CodeParams) -> range:
    return range(0, _terminal_limits(params)[1] + 1)


def dual_terminal_formula(params: CodeParams, s: int, convention: Convention = "corollary") -> int:
    """d⊥_{n−k−s}.

    ``corollary`` picks j with H_j ≤ s < H_{j+1}; ``literal`` picks j with
    H_{j−1} ≤ s < H_j.  The two differ by one past s = d − 2, and only the
    first agrees with exhaustive search.
    """
    first, last = _terminal_limits(params)
    if not 0 <= s <= last:
        raise DomainViolation(f"dual terminal formula for {params.label} holds for 0 <= s <= {last}, got s={s}")
    if s <= first:
        return params.n - s
    j = 1
    while True:
        lo = h_sequence(params, j if convention == "corollary" else j - 1)
        hi = h_sequence(params, j + 1 if convention == "corollary" else j)
        if lo is None or hi is None:
            raise DomainViolation(f"H-sequence is not integral near s={s}")
        if lo <= s < hi:
            return params.n - s - j
        j += 1


def dual_terminal_recursive(params: CodeParams, s_max: int, convention: Convention = "corollary") -> list[int]:
    """d⊥_{n−k−s} for s = 0..s_max, stepping down from n.

    A step is −2 when the previous value equals n + 2 − d·G_j for some j ≥ 1
    (``literal``: n + 1 − d·G_j), −1 otherwise.
    """
    first, last = _terminal_limits(params)
    if not 0 <= s_max <= last:
        raise DomainViolation(f"dual terminal recursion for {params.label} holds for s <= {last}, got {s_max}")
    d = min_distance_formula(params)
    shift = 2 if convention == "corollary" else 1
    marks = set()
    for j in range(1, initial_domain(params).stop):
        value = d * g_sequence(params.q, j)
        if value.denominator == 1:
            marks.add(params.n + shift - value.numerator)
    values = [params.n]
    for _ in range(s_max):
        prev = values[-1]
        values.append(prev - 2 if prev in marks else prev - 1)
    return values


# ---------------------------------------------------------------- reports


class DualWeightEntry(BaseModel):
    s: int
    index: int
    value: int
    method: DualMethod


class DualWeightReport(BaseModel):
    params: Optional[dict] = None
    q: int
    side: Literal["initial", "terminal"]
    s_range: tuple[int, int]
    entries: list[DualWeightEntry]
    Q: list[int]
    G: list[tuple[int, int]]
    H: list[Optional[int]]

    @property
    def values(self) -> list[int]:
        return [e.value for e in self.entries]


def dual_weight_report(
    params: Optional[CodeParams],
    s_range: tuple[int, int],
    mode: Literal["formula", "recursive", "transform"] = "formula",
    side: Literal["initial", "terminal"] = "initial",
    q: Optional[int] = None,
    primal: Optional[WeightHierarchy] = None,
    convention: Convention = "corollary",
) -> DualWeightReport:
    """Dual weights over an inclusive s-range by one of the three methods.

    Without params only the initial side is available and the values are
    those of the large-ℓ' regime for field size ``q``.  ``transform`` reads
    them off ``primal`` (by default the closed-form hierarchy).
    """
    lo, hi = s_range
    if lo > hi:
        raise OutOfRange(f"empty s-range {lo}..{hi}")
    if params is None:
        if q is None:
            raise DomainViolation("either code parameters or a field size are required")
        if side != "initial" or mode == "transform":
            raise DomainViolation("terminal dual weights and the duality transform need code parameters")
    else:
        q = params.q

    lp = params.lp if params is not None else None
    entries: list[DualWeightEntry] = []
    if mode == "formula":
        for s in range(lo, hi + 1):
            value = (
                dual_initial_value(q, s, lp)
                if side == "initial"
                else dual_terminal_formula(params, s, convention)
            )
            entries.append(_entry(params, side, s, value, "direct-formula"))
    elif mode == "recursive":
        if side == "initial":
            values = recursive_initial_values(q, hi, lp)
            pairs = [(s, values[s - 1]) for s in range(max(lo, 1), hi + 1)]
        else:
            values = dual_terminal_recursive(params, hi, convention)
            pairs = [(s, values[s]) for s in range(lo, hi + 1)]
        entries.extend(_entry(params, side, s, v, "recursive") for s, v in pairs)
    else:
        hierarchy = formula_hierarchy(params) if primal is None else primal.merge(formula_hierarchy(params))
        lookup = dual_initial_lookup if side == "initial" else dual_terminal_lookup
        for s in range(lo, hi + 1):
            entries.append(_entry(params, side, s, lookup(hierarchy, s), "duality-transform"))

    width = max(hi, 1) + 1 if params is None else params.lp + 2
    return DualWeightReport(
        params=params.to_dict() if params is not None else None,
        q=q,
        side=side,
        s_range=(lo, hi),
        entries=entries,
        Q=[q_sequence(q, j) for j in range(min(width, 64))],
        G=[_pair(q, j) for j in range(min(width, 64))],
        H=[h_sequence(params, j) for j in range(width)] if params is not None else [],
    )


def _pair(q: int, j: int) -> tuple[int, int]:
    """G_j as (q^{j−1}·G_j, q^{j−1}); G_0 as (0, 1)."""
    if j == 0:
        return (0, 1)
    den = q ** (j - 1)
    return ((g_sequence(q, j) * den).numerator, den)


def _entry(params: Optional[CodeParams], side: str, s: int, value: int, method: DualMethod) -> DualWeightEntry:
    if side == "initial" or params is None:
        index = s
    else:
        index = params.n - params.k - s
    return DualWeightEntry(s=s, index=index, value=value, method=method)
