"""Exact arithmetic in GF(q) with integer-encoded elements.

Element ``a`` encodes the polynomial whose base-p digits are its coefficients,
constant term in the least significant digit, so the field is exactly
``0..q-1`` with 0 as zero and 1 as one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

import numpy as np
from loguru import logger

from affgrass.errors import DivisionByZero, NotAPrimePower, OutOfRange, TooLarge
from affgrass.field.polynomial import poly_mod, poly_mul, smallest_irreducible

MAX_ORDER = 2 ** 16
TABLE_LIMIT = 256


@dataclass(frozen=True)
class FieldSpec:
    order: int
    characteristic: int
    degree: int
    modulus: Optional[tuple[int, ...]] = None
    add_table: Optional[np.ndarray] = field(default=None, repr=False, compare=False)
    mul_table: Optional[np.ndarray] = field(default=None, repr=False, compare=False)
    inv_table: Optional[np.ndarray] = field(default=None, repr=False, compare=False)
    neg_table: Optional[np.ndarray] = field(default=None, repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.order

    @property
    def is_prime(self) -> bool:
        return self.degree == 1

    @property
    def has_tables(self) -> bool:
        return self.mul_table is not None

    @property
    def dtype(self) -> type:
        return np.uint8 if self.order <= 256 else np.uint16

    def elements(self) -> range:
        return range(self.order)

    # ------------------------------------------------------------ numpy ops

    def asarray(self, values) -> np.ndarray:
        arr = np.asarray(values, dtype=np.int64)
        if arr.size and (arr.min() < 0 or arr.max() >= self.order):
            raise OutOfRange(f"array holds values outside GF({self.order})")
        return arr.astype(self.dtype)

    def add_array(self, a, b) -> np.ndarray:
        a = np.asarray(a)
        b = np.asarray(b)
        if self.is_prime:
            return ((a.astype(np.int64) + b) % self.characteristic).astype(self.dtype)
        if self.characteristic == 2:
            return np.bitwise_xor(a.astype(self.dtype), b.astype(self.dtype))
        if self.add_table is not None:
            return self.add_table[a, b]
        return _elementwise(fq_add, self, a, b)

    def mul_array(self, a, b) -> np.ndarray:
        a = np.asarray(a)
        b = np.asarray(b)
        if self.is_prime:
            return ((a.astype(np.int64) * b) % self.characteristic).astype(self.dtype)
        if self.mul_table is not None:
            return self.mul_table[a, b]
        return _elementwise(fq_mul, self, a, b)

    def neg_array(self, a) -> np.ndarray:
        a = np.asarray(a)
        if self.characteristic == 2:
            return a.astype(self.dtype)
        if self.is_prime:
            return ((-a.astype(np.int64)) % self.characteristic).astype(self.dtype)
        if self.neg_table is not None:
            return self.neg_table[a]
        return self.mul_array(a, np.full(a.shape, self.characteristic - 1))

    def matmul(self, a, b) -> np.ndarray:
        """Matrix product over GF(q) of (r×k) and (k×n) arrays."""
        a = np.asarray(a)
        b = np.asarray(b)
        if self.is_prime:
            # entries < 2^16 and k small keep int64 sums exact
            return ((a.astype(np.int64) @ b.astype(np.int64)) % self.characteristic).astype(self.dtype)
        out = np.zeros((a.shape[0], b.shape[1]), dtype=self.dtype)
        for t in range(a.shape[1]):
            out = self.add_array(out, self.mul_array(a[:, t : t + 1], b[t : t + 1, :]))
        return out


def _elementwise(op, F: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ufunc = np.frompyfunc(lambda x, y: op(int(x), int(y), F), 2, 1)
    return ufunc(a, b).astype(F.dtype)


# ------------------------------------------------------------------ factories


def _prime_factors(n: int) -> list[int]:
    factors: list[int] = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


@lru_cache(maxsize=None)
def field_from_order(q: int) -> FieldSpec:
    """Build GF(q) with the smallest monic irreducible modulus of its degree."""
    q = int(q)
    if q < 2:
        raise OutOfRange(f"field order must be at least 2, got {q}")
    if q > MAX_ORDER:
        raise TooLarge(f"field order {q} exceeds {MAX_ORDER}")
    primes = _prime_factors(q)
    if len(primes) != 1:
        raise NotAPrimePower(f"{q} is not a prime power (prime factors {primes})")
    p = primes[0]
    e = 0
    rest = q
    while rest > 1:
        rest //= p
        e += 1

    modulus = smallest_irreducible(e, p) if e > 1 else None
    base = FieldSpec(order=q, characteristic=p, degree=e, modulus=modulus)
    if q > TABLE_LIMIT:
        logger.debug(f"GF({q}): p={p}, e={e}, modulus={modulus}, no tables")
        return base

    elems = range(q)
    dtype = base.dtype
    add_table = np.array([[fq_add(a, b, base) for b in elems] for a in elems], dtype=dtype)
    mul_table = np.array([[fq_mul(a, b, base) for b in elems] for a in elems], dtype=dtype)
    inv_table = np.zeros(q, dtype=dtype)
    for a in range(1, q):
        inv_table[a] = _pow(a, q - 2, base)
    neg_table = np.array([fq_neg(a, base) for a in elems], dtype=dtype)
    logger.debug(f"GF({q}): p={p}, e={e}, modulus={modulus}, tables built")
    return FieldSpec(
        order=q,
        characteristic=p,
        degree=e,
        modulus=modulus,
        add_table=add_table,
        mul_table=mul_table,
        inv_table=inv_table,
        neg_table=neg_table,
    )


# ------------------------------------------------------------ scalar ops


def _check(a: int, F: FieldSpec) -> int:
    a = int(a)
    if a < 0 or a >= F.order:
        raise OutOfRange(f"{a} is not an element of GF({F.order})")
    return a


def _digits(a: int, F: FieldSpec) -> list[int]:
    out = []
    for _ in range(F.degree):
        out.append(a % F.characteristic)
        a //= F.characteristic
    return out


def _from_digits(digits, F: FieldSpec) -> int:
    value = 0
    for d in reversed(list(digits)[: F.degree]):
        value = value * F.characteristic + d
    return value


def fq_add(a: int, b: int, F: FieldSpec) -> int:
    a, b = _check(a, F), _check(b, F)
    p = F.characteristic
    if F.is_prime:
        return (a + b) % p
    if p == 2:
        return a ^ b
    return _from_digits(((x + y) % p for x, y in zip(_digits(a, F), _digits(b, F))), F)


def fq_neg(a: int, F: FieldSpec) -> int:
    a = _check(a, F)
    p = F.characteristic
    if F.is_prime:
        return (-a) % p
    return _from_digits(((-x) % p for x in _digits(a, F)), F)


def fq_sub(a: int, b: int, F: FieldSpec) -> int:
    return fq_add(a, fq_neg(b, F), F)


def fq_mul(a: int, b: int, F: FieldSpec) -> int:
    a, b = _check(a, F), _check(b, F)
    if F.mul_table is not None:
        return int(F.mul_table[a, b])
    p = F.characteristic
    if F.is_prime:
        return (a * b) % p
    prod = poly_mul(_digits(a, F), _digits(b, F), p)
    rem = poly_mod(prod, F.modulus, p)
    return _from_digits(list(rem) + [0] * (F.degree - len(rem)), F)


def _pow(a: int, k: int, F: FieldSpec) -> int:
    result = 1
    base = a
    while k > 0:
        if k & 1:
            result = fq_mul(result, base, F)
        base = fq_mul(base, base, F)
        k >>= 1
    return result


def fq_pow(a: int, k: int, F: FieldSpec) -> int:
    """Square-and-multiply; negative exponents go through the inverse."""
    a = _check(a, F)
    if k < 0:
        return _pow(fq_inv(a, F), -k, F)
    return _pow(a, k, F)


def fq_inv(a: int, F: FieldSpec) -> int:
    a = _check(a, F)
    if a == 0:
        raise DivisionByZero(f"0 has no inverse in GF({F.order})")
    if F.inv_table is not None:
        return int(F.inv_table[a])
    if F.is_prime:
        return pow(a, F.characteristic - 2, F.characteristic)
    return _pow(a, F.order - 2, F)


def fq_div(a: int, b: int, F: FieldSpec) -> int:
    return fq_mul(a, fq_inv(b, F), F)
