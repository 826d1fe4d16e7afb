from __future__ import annotations

import numpy as np
import pytest

from affgrass.errors import DivisionByZero, NotAPrimePower, OutOfRange, TooLarge
from affgrass.field import field_from_order, fq_add, fq_div, fq_inv, fq_mul, fq_neg, fq_pow, fq_sub
from affgrass.field.polynomial import is_irreducible, poly_mod, poly_mul, smallest_irreducible


def test_smallest_irreducible_moduli() -> None:
    assert smallest_irreducible(2, 2) == (1, 1, 1)
    assert smallest_irreducible(3, 2) == (1, 1, 0, 1)
    assert smallest_irreducible(2, 3) == (1, 0, 1)
    assert not is_irreducible((1, 0, 1), 2)
    assert poly_mod((1, 0, 1), (1, 1), 2) == ()
    assert poly_mul((1, 1), (1, 1), 2) == (1, 0, 1)


def test_field_from_order_records_structure() -> None:
    F = field_from_order(9)
    assert (F.order, F.characteristic, F.degree) == (9, 3, 2)
    assert F.modulus == (1, 0, 1)
    assert field_from_order(7).modulus is None
    assert field_from_order(4) is field_from_order(4)


@pytest.mark.parametrize("q,error", [(6, NotAPrimePower), (12, NotAPrimePower), (1, OutOfRange), (65537, TooLarge)])
def test_field_from_order_rejects(q: int, error: type) -> None:
    with pytest.raises(error):
        field_from_order(q)


def test_extension_field_products() -> None:
    F4 = field_from_order(4)
    assert fq_mul(2, 2, F4) == 3
    assert fq_mul(2, 3, F4) == 1
    assert fq_inv(2, F4) == 3

    F8 = field_from_order(8)
    assert fq_mul(2, 4, F8) == 3
    assert fq_pow(2, 7, F8) == 1

    F9 = field_from_order(9)
    assert fq_mul(3, 3, F9) == 2
    assert fq_neg(3, F9) == 6
    assert fq_add(3, 6, F9) == 0


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17])
def test_field_axioms_exhaustively(q: int) -> None:
    F = field_from_order(q)
    for a in range(q):
        assert fq_add(a, fq_neg(a, F), F) == 0
        assert fq_mul(a, 1, F) == a
        if a:
            assert fq_mul(a, fq_inv(a, F), F) == 1
            assert fq_pow(a, q - 1, F) == 1
        for b in range(q):
            assert fq_add(a, b, F) == fq_add(b, a, F)
            assert fq_mul(a, b, F) == fq_mul(b, a, F)
            assert fq_sub(fq_add(a, b, F), b, F) == a
            if b:
                assert fq_mul(fq_div(a, b, F), b, F) == a
            for c in range(q):
                left = fq_mul(a, fq_add(b, c, F), F)
                assert left == fq_add(fq_mul(a, b, F), fq_mul(a, c, F), F)


@pytest.mark.parametrize("q", [3, 4, 8, 9, 257])
def test_array_ops_agree_with_scalar_ops(q: int) -> None:
    F = field_from_order(q)
    rng = np.random.default_rng(q)
    a = rng.integers(0, q, size=200)
    b = rng.integers(0, q, size=200)
    added = F.add_array(a, b)
    multiplied = F.mul_array(a, b)
    negated = F.neg_array(a)
    for i in range(200):
        assert added[i] == fq_add(int(a[i]), int(b[i]), F)
        assert multiplied[i] == fq_mul(int(a[i]), int(b[i]), F)
        assert negated[i] == fq_neg(int(a[i]), F)


def test_matmul_over_gf4() -> None:
    F = field_from_order(4)
    a = np.array([[1, 2], [3, 0]])
    b = np.array([[2, 1], [1, 3]])
    expected = [
        [fq_add(fq_mul(1, 2, F), fq_mul(2, 1, F), F), fq_add(fq_mul(1, 1, F), fq_mul(2, 3, F), F)],
        [fq_mul(3, 2, F), fq_mul(3, 1, F)],
    ]
    assert F.matmul(a, b).tolist() == expected


def test_division_by_zero_and_bad_elements() -> None:
    F = field_from_order(5)
    with pytest.raises(DivisionByZero):
        fq_inv(0, F)
    with pytest.raises(ZeroDivisionError):
        fq_div(3, 0, F)
    with pytest.raises(OutOfRange):
        fq_add(5, 1, F)
    with pytest.raises(OutOfRange):
        F.asarray([0, 7])


def test_every_small_field_has_inverses() -> None:
    orders = []
    for q in range(2, 257):
        try:
            F = field_from_order(q)
        except NotAPrimePower:
            continue
        orders.append(q)
        for a in range(1, q):
            assert fq_mul(a, fq_inv(a, F), F) == 1, (q, a)
    assert len(orders) == 70
    assert orders[-1] == 256
