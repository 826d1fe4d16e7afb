"""Explicit subcodes attaining the known initial and terminal weights."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from loguru import logger

from affgrass.codes.linear import Subcode
from affgrass.errors import DomainViolation, WitnessMismatch
from affgrass.formulas.weights import (
    conjecture_d2_value,
    initial_domain,
    initial_dr_formula,
    terminal_dr_formula,
)
from affgrass.grassmann.counting import count_common_zeros, count_nonvanishing, subfamilies
from affgrass.grassmann.minors import (
    MinorIndex,
    basis_position,
    leading_principal,
    lemma_family_A,
    lemma_family_B,
)
from affgrass.grassmann.params import CodeParams, code_params


@dataclass(frozen=True)
class Witness:
    subcode: Subcode
    weight: int
    minors: tuple[MinorIndex, ...] = ()

    def to_dict(self) -> dict:
        out = self.subcode.to_dict()
        out["weight"] = self.weight
        if self.minors:
            out["minors"] = [m.label for m in self.minors]
        return out


def zero_set_count(coeffs, params: CodeParams, budget: Optional[int] = None) -> int:
    """|Z(W)| for W spanned by coefficient rows over the minor basis."""
    coeffs = np.asarray(coeffs)
    if coeffs.ndim == 1 and coeffs.size:
        coeffs = coeffs[None, :]
    if coeffs.size == 0:
        coeffs = np.zeros((0, params.k), dtype=params.field.dtype)
    return count_common_zeros(coeffs, params, budget)


def _span_of_minors(minors: Sequence[MinorIndex], params: CodeParams) -> Subcode:
    positions = [basis_position(m, params) for m in minors]
    return Subcode.span_of_positions(positions, params.field, params.k)


def initial_family(params: CodeParams, r: int) -> list[MinorIndex]:
    domain = initial_domain(params)
    if r not in domain:
        raise DomainViolation(
            f"no initial witness for {params.label} at r={r}; "
            f"valid range is {domain.start}..{domain.stop - 1}"
        )
    if r <= params.lp - params.h + 1:
        return lemma_family_A(params, r)
    return lemma_family_B(params, r)


def witness_initial(params: CodeParams, r: int, budget: Optional[int] = None) -> Witness:
    minors = tuple(initial_family(params, r))
    subcode = _span_of_minors(minors, params)
    weight = params.n - zero_set_count(subcode.coeffs, params, budget)
    expected = initial_dr_formula(params, r)
    if weight != expected:
        raise WitnessMismatch(f"{params.label}: initial witness r={r} has weight {weight}, formula gives {expected}")
    logger.debug(f"{params.label}: initial witness r={r} weight {weight}")
    return Witness(subcode=subcode, weight=weight, minors=minors)


def witness_terminal(params: CodeParams, r: int, budget: Optional[int] = None) -> Witness:
    """Span of N_1..N_{k−r}, of weight q^δ − q^{r−1}."""
    if not 1 <= r <= params.lp + 1:
        raise DomainViolation(f"terminal witness needs 1 <= r <= l'+1 = {params.lp + 1}, got r={r}")
    subcode = Subcode.span_of_positions(range(params.k - r), params.field, params.k)
    weight = params.n - zero_set_count(subcode.coeffs, params, budget)
    expected = terminal_dr_formula(params, r)
    if weight != expected:
        raise WitnessMismatch(f"{params.label}: terminal witness r={r} has weight {weight}, formula gives {expected}")
    return Witness(subcode=subcode, weight=weight)


def inclusion_exclusion_union(params: CodeParams, r: int, budget: Optional[int] = None) -> int:
    """|A_1 ∪ … ∪ A_r| for the initial family, from the intersection counts alone."""
    family = initial_family(params, r)
    total = 0
    for subset in subfamilies(family):
        sign = 1 if len(subset) % 2 else -1
        total += sign * count_nonvanishing(subset, params, budget)
    return total


def witness_d2_upper(l: int, q: int, budget: Optional[int] = None) -> Witness:
    """Two leading principal minors of C^A(ℓ, 2ℓ); their span has the conjectured d_2 weight."""
    params = code_params(q, l, l, l)
    minors = (leading_principal(l), leading_principal(l - 1))
    subcode = _span_of_minors(minors, params)
    weight = params.n - zero_set_count(subcode.coeffs, params, budget)
    expected = conjecture_d2_value(l, q)
    if weight != expected:
        raise WitnessMismatch(f"{params.label}: two-minor span has weight {weight}, expected {expected}")
    return Witness(subcode=subcode, weight=weight, minors=minors)
