"""Closed forms for the weights of C^A(ℓ, m; h).  Exact integer arithmetic only."""

from __future__ import annotations

from fractions import Fraction

from affgrass.errors import DomainViolation
from affgrass.grassmann.params import CodeParams


def gl_order(t: int, q: int) -> int:
    """|GL_t(F_q)|."""
    out = 1
    for i in range(t):
        out *= q ** t - q ** i
    return out


def min_distance_formula(params: CodeParams) -> int:
    q, h = params.q, params.h
    return q ** (params.delta - h * h) * gl_order(h, q)


def initial_domain(params: CodeParams) -> range:
    """Values of r for which the initial weights meet the Griesmer–Wei bound.

    r = 1 is always included (it is the minimum distance); beyond that the
    bound needs h < ℓ' whenever ℓ' ≤ 2h.
    """
    h, lp = params.h, params.lp
    if lp <= 2 * h and h >= lp:
        return range(1, 2)
    return range(1, max(lp - h, h) + 2)


def _exact(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {value}")
    return value.numerator


def initial_dr_formula(params: CodeParams, r: int) -> int:
    domain = initial_domain(params)
    if r not in domain:
        raise DomainViolation(
            f"initial weight formula for {params.label} holds for r in "
            f"{domain.start}..{domain.stop - 1}, got r={r}"
        )
    q = params.q
    d = min_distance_formula(params)
    return _exact(Fraction(d * (q ** r - 1), q ** (r - 1) * (q - 1)), f"d_{r}")


def terminal_dr_formula(params: CodeParams, r: int) -> int:
    """d_{k−r}; r = 0 gives the length q^δ."""
    if not 0 <= r <= params.lp + 1:
        raise DomainViolation(f"terminal weight formula needs 0 <= r <= l'+1 = {params.lp + 1}, got r={r}")
    if r == 0:
        return params.n
    return params.n - params.q ** (r - 1)


def terminal_domain(params: CodeParams) -> range:
    return range(0, min(params.lp + 1, params.k) + 1)


def griesmer_wei(d1: int, r: int, q: int) -> int:
    return sum(-(-d1 // q ** i) for i in range(r))


def conjecture_d2_value(l: int, q: int) -> int:
    """The d_2 value suggested for C^A(ℓ, 2ℓ); an upper bound in every case."""
    if l < 1:
        raise DomainViolation(f"need l >= 1, got {l}")
    d = gl_order(l, q)
    return _exact(d + Fraction(d * q ** (l - 1), q ** l - 1), "d_2 bound")


def intersection_count_formula(params: CodeParams, s: int) -> int:
    """|A_{j_1} ∩ … ∩ A_{j_s}| for s members of a close family: d·(1 − 1/q)^{s−1}."""
    if s < 1:
        raise DomainViolation(f"need s >= 1, got {s}")
    q = params.q
    return _exact(min_distance_formula(params) * Fraction(q - 1, q) ** (s - 1), f"intersection of {s}")
