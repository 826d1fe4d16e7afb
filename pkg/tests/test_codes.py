from __future__ import annotations

import json

import numpy as np
import pytest

from affgrass.codes import (
    LinearCode,
    Subcode,
    build_code,
    dual_code,
    encode,
    hamming_weight,
    load_code,
    null_space,
    rank,
    rref,
    row_spaces_equal,
    store_code,
    support_weight,
)
from affgrass.errors import BudgetExceeded, LengthMismatch, RankDeficient, RecordError
from affgrass.field import field_from_order
from affgrass.grassmann import MinorIndex, basis_position, variable
from affgrass.hierarchy import enumerate_subspaces
from tests.utils import all_messages, make_code, make_params, naive_weight_distribution


def test_rref_rank_and_pivots() -> None:
    F = field_from_order(2)
    reduced, r, pivots = rref([[1, 1, 0], [1, 1, 0], [0, 1, 1]], F)
    assert r == 2
    assert pivots == [0, 1]
    assert reduced[:r].tolist() == [[1, 0, 1], [0, 1, 1]]
    assert rank([[0, 0], [0, 0]], F) == 0


def test_rref_small_cases() -> None:
    F2 = field_from_order(2)
    reduced, r, pivots = rref([[1, 1], [1, 1]], F2)
    assert (r, pivots) == (1, [0])
    assert reduced.tolist() == [[1, 1], [0, 0]]

    F3 = field_from_order(3)
    reduced, r, pivots = rref([[0, 2], [1, 1]], F3)
    assert (r, pivots) == (2, [0, 1])
    assert reduced.tolist() == [[1, 0], [0, 1]]

    eye = np.eye(3, dtype=int)
    assert rref(eye, F3)[0].tolist() == eye.tolist()


def test_null_space_is_orthogonal_and_complete() -> None:
    F2 = field_from_order(2)
    assert null_space([[1, 1, 0], [0, 1, 1]], F2).tolist() == [[1, 1, 1]]

    F9 = field_from_order(9)
    A = np.array([[1, 3, 5, 0], [0, 1, 2, 7]])
    N = null_space(A, F9)
    assert N.shape == (2, 4)
    assert not F9.matmul(A, N.T).any()
    assert rank(N, F9) == 2


def test_row_spaces_equal() -> None:
    F = field_from_order(3)
    assert row_spaces_equal([[1, 2, 0], [0, 1, 1]], [[1, 0, 1], [0, 2, 2]], F)
    assert not row_spaces_equal([[1, 0, 0]], [[0, 1, 0]], F)


def test_build_smallest_code() -> None:
    code = make_code(2, 1, 2, 1)
    assert code.generator.tolist() == [[0, 1, 0, 1], [0, 0, 1, 1], [1, 1, 1, 1]]
    assert (code.n, code.k) == (4, 3)
    assert code.tag == "affine-grassmann"
    assert naive_weight_distribution(code) == {0: 1, 2: 6, 4: 1}


@pytest.mark.parametrize("spec", [(2, 2, 2, 2), (3, 1, 2, 1), (4, 1, 2, 1), (2, 2, 3, 2)])
def test_built_codes_have_full_rank(spec: tuple) -> None:
    params = make_params(*spec)
    code = build_code(params)
    assert code.generator.shape == (params.k, params.n)
    assert rank(code.generator, code.field) == params.k


def test_build_respects_point_budget() -> None:
    with pytest.raises(BudgetExceeded):
        build_code(make_params(2, 2, 3, 2), budget=10)


def test_dual_code() -> None:
    code = make_code(2, 1, 2, 1)
    dual = dual_code(code)
    assert dual.generator.tolist() == [[1, 1, 1, 1]]
    assert dual.tag == "dual"

    bigger = make_code(3, 1, 2, 1)
    dual = dual_code(bigger)
    assert dual.dimension == bigger.length - bigger.dimension
    assert not bigger.field.matmul(bigger.generator, dual.generator.T).any()


def test_rank_deficient_generator() -> None:
    F = field_from_order(2)
    with pytest.raises(RankDeficient):
        LinearCode.from_generator(F, [[1, 1, 0], [1, 1, 0]])


def test_encode_and_weights() -> None:
    code = make_code(2, 1, 2, 1)
    assert encode([1, 1, 0], code).tolist() == [0, 1, 1, 0]
    assert hamming_weight(encode([1, 1, 1], code)) == 2
    with pytest.raises(LengthMismatch):
        encode([1, 0], code)


def test_subcodes() -> None:
    F = field_from_order(2)
    D = Subcode.from_rows([[1, 1, 0], [0, 1, 0]], F, 3)
    assert D.pivots == (0, 1)
    assert D.coeffs.tolist() == [[1, 0, 0], [0, 1, 0]]
    assert D.rank == 2

    code = make_code(2, 1, 2, 1)
    assert support_weight(code, Subcode.span_of_positions([0, 1], F, 3)) == 3
    assert support_weight(code, Subcode.span_of_positions([2], F, 3)) == 4
    assert support_weight(code, Subcode.from_rows(np.zeros((0, 3)), F, 3)) == 0
    with pytest.raises(LengthMismatch):
        Subcode.from_rows([[1, 0]], F, 3)


@pytest.mark.parametrize("spec", [(2, 1, 2, 1), (4, 1, 2, 1), (3, 2, 2, 1)])
def test_code_records_reload(tmp_path, spec: tuple) -> None:
    code = make_code(*spec)
    path = store_code(code, tmp_path / "code.json")
    loaded = load_code(path)
    assert np.array_equal(loaded.generator, code.generator)
    assert loaded.params == code.params
    assert loaded.field.modulus == code.field.modulus

    dual = dual_code(code)
    reloaded = load_code(store_code(dual, tmp_path / "dual.json"))
    assert np.array_equal(reloaded.generator, dual.generator)


def test_code_records_reject_tampering(tmp_path) -> None:
    path = store_code(make_code(4, 1, 2, 1), tmp_path / "code.json")
    record = json.loads(path.read_text(encoding="utf-8"))

    bad_modulus = dict(record, modulus=[1, 0, 1])
    (tmp_path / "modulus.json").write_text(json.dumps(bad_modulus), encoding="utf-8")
    with pytest.raises(RecordError):
        load_code(tmp_path / "modulus.json")

    bad_rows = dict(record, rows=record["rows"][:-1])
    (tmp_path / "rows.json").write_text(json.dumps(bad_rows), encoding="utf-8")
    with pytest.raises(RecordError):
        load_code(tmp_path / "rows.json")

    (tmp_path / "garbage.json").write_text("{not json", encoding="utf-8")
    with pytest.raises(RecordError):
        load_code(tmp_path / "garbage.json")


@pytest.mark.parametrize("spec", [(2, 1, 2, 1), (3, 1, 2, 1), (2, 2, 2, 1), (2, 2, 2, 2)])
def test_dual_of_dual_is_the_code(spec: tuple) -> None:
    code = make_code(*spec)
    again = dual_code(dual_code(code))
    assert row_spaces_equal(again.generator, code.generator, code.field)


def test_dual_of_full_space_is_zero() -> None:
    F = field_from_order(2)
    full = LinearCode.from_generator(F, np.eye(2, dtype=int))
    dual = dual_code(full)
    assert dual.dimension == 0
    assert dual.length == 2


@pytest.mark.parametrize("spec", [(3, 1, 2, 1), (4, 1, 2, 1)])
def test_line_support_is_codeword_weight(spec: tuple) -> None:
    code = make_code(*spec)
    F, k = code.field, code.dimension
    for message in all_messages(k, F.order):
        if not any(message):
            continue
        weight = hamming_weight(encode(message, code))
        assert support_weight(code, Subcode.from_rows([message], F, k)) == weight
        for c in range(2, F.order):
            scaled = F.mul_array(F.asarray(message), c)
            assert hamming_weight(encode(scaled, code)) == weight


@pytest.mark.parametrize("spec", [(2, 1, 2, 1), (3, 1, 2, 1), (2, 2, 2, 1), (2, 2, 2, 2)])
def test_affine_subcodes_meet_the_flat_bound(spec: tuple) -> None:
    params = make_params(*spec)
    code = build_code(params)
    F, k, q, delta = code.field, code.dimension, params.q, params.delta
    positions = [basis_position(MinorIndex((), ()), params)]
    positions += [basis_position(variable(i, j), params) for i in range(1, params.l + 1) for j in range(1, params.lp + 1)]
    for t in range(1, delta + 1):
        bound = q ** delta - q ** (delta - t)
        weights = []
        for D in enumerate_subspaces(delta + 1, t, F):
            rows = np.zeros((t, k), dtype=F.dtype)
            rows[:, positions] = D.coeffs
            weights.append(support_weight(code, Subcode.from_rows(rows, F, k)))
        assert min(weights) == bound
