"""Polynomials over GF(p) as coefficient tuples, constant term first."""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

Poly = tuple[int, ...]


def trim(coeffs: Sequence[int]) -> Poly:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(poly: Sequence[int]) -> int:
    return len(trim(poly)) - 1


def poly_mod(num: Sequence[int], den: Sequence[int], p: int) -> Poly:
    """Remainder of num divided by a nonzero den over GF(p)."""
    den = trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(trim(num))
    lead_inv = pow(den[-1], p - 2, p) if p > 2 else 1
    while len(rem) >= len(den):
        shift = len(rem) - len(den)
        factor = (rem[-1] * lead_inv) % p
        for i, c in enumerate(den):
            rem[shift + i] = (rem[shift + i] - factor * c) % p
        rem = list(trim(rem))
    return tuple(rem)


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return trim(out)


def monic_polys(deg: int, p: int) -> Iterator[Poly]:
    """All monic polynomials of a given degree, smallest encoding first.

    The encoding reads the non-leading coefficients as base-p digits with the
    constant term least significant, so iteration order is lexicographic on
    (c_{deg-1}, ..., c_0).
    """
    for digits in product(range(p), repeat=deg):
        yield tuple(reversed(digits)) + (1,)


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree ≤ deg/2."""
    poly = trim(poly)
    deg = len(poly) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    if poly[0] == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for divisor in monic_polys(d, p):
            if not poly_mod(poly, divisor, p):
                return False
    return True


def smallest_irreducible(deg: int, p: int) -> Poly:
    for candidate in monic_polys(deg, p):
        if is_irreducible(candidate, p):
            return candidate
    raise ArithmeticError(f"no irreducible polynomial of degree {deg} over GF({p})")
