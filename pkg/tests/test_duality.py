from __future__ import annotations

import pytest

from affgrass.codes import dual_code
from affgrass.errors import DomainViolation, IncompleteHierarchy, OutOfRange
from affgrass.formulas import (
    dual_hierarchy_from_primal,
    dual_initial_formula,
    dual_initial_lookup,
    dual_initial_value,
    dual_recursive,
    dual_terminal_domain,
    dual_terminal_formula,
    dual_terminal_lookup,
    dual_terminal_recursive,
    dual_weight_report,
    formula_hierarchy,
    g_sequence,
    h_sequence,
    initial_dr_formula,
    q_sequence,
    recursive_initial_values,
)
from affgrass.hierarchy import WeightHierarchy, exact_dr, exact_hierarchy
from tests.utils import make_code, make_params


def test_wei_duality_transform() -> None:
    assert dual_hierarchy_from_primal(WeightHierarchy.exact(4, [2, 3, 4])).d == [0, 4]
    assert dual_hierarchy_from_primal(WeightHierarchy.exact(8, [4, 6, 7, 8])).d == [0, 4, 6, 7, 8]
    with pytest.raises(IncompleteHierarchy):
        dual_hierarchy_from_primal(WeightHierarchy(n=4, k=3, d=[0, None, 3, 4]))


@pytest.mark.parametrize("spec", [(2, 1, 2, 1), (2, 1, 3, 1), (3, 1, 2, 1)])
def test_wei_duality_against_exhaustive_dual(spec: tuple) -> None:
    code = make_code(*spec)
    primal = exact_hierarchy(code)
    assert exact_hierarchy(dual_code(code)).d == dual_hierarchy_from_primal(primal).d


def test_lookups_match_transform() -> None:
    primal = WeightHierarchy.exact(8, [4, 6, 7, 8])
    dual = dual_hierarchy_from_primal(primal)
    assert [dual_initial_lookup(primal, s) for s in range(1, 5)] == dual.d[1:]
    assert [dual_terminal_lookup(primal, s) for s in range(4)] == [8, 7, 6, 4]
    with pytest.raises(OutOfRange):
        dual_initial_lookup(primal, 0)
    with pytest.raises(OutOfRange):
        dual_terminal_lookup(primal, 4)


def test_lookups_on_partial_hierarchies() -> None:
    partial = formula_hierarchy(make_params(2, 2, 3, 2))
    assert dual_terminal_lookup(partial, 22) == 42
    assert dual_terminal_lookup(partial, 23) == 40
    assert dual_initial_lookup(partial, 1) == 4
    with pytest.raises(IncompleteHierarchy):
        dual_terminal_lookup(partial, 40)


def test_auxiliary_sequences() -> None:
    assert [q_sequence(2, j) for j in range(5)] == [1, 1, 2, 5, 12]
    assert g_sequence(2, 0) == 0
    assert g_sequence(2, 3) * 4 == 7
    params = make_params(2, 2, 3, 2)
    assert [h_sequence(params, j) for j in range(4)] == [0, 23, 34, 39]
    for j in range(1, 4):
        assert h_sequence(params, j) == initial_dr_formula(params, j) - j


def test_dual_initial_values() -> None:
    assert [dual_initial_value(2, s) for s in range(1, 6)] == [4, 6, 7, 8, 10]
    assert [dual_initial_value(3, s) for s in range(1, 7)] == [3, 5, 6, 7, 8, 9]
    assert [dual_initial_value(17, s) for s in range(1, 6)] == [3, 4, 5, 6, 7]
    assert recursive_initial_values(2, 5) == [4, 6, 7, 8, 10]
    assert recursive_initial_values(3, 6) == [3, 5, 6, 7, 8, 9]
    with pytest.raises(DomainViolation):
        dual_initial_value(2, 0)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17])
def test_dual_minimum_distance(q: int) -> None:
    assert dual_initial_value(q, 1) == (4 if q == 2 else 3)


def test_dual_minimum_distance_by_search() -> None:
    assert exact_dr(dual_code(make_code(2, 1, 2, 1)), 1) == 4
    assert exact_dr(dual_code(make_code(3, 1, 2, 1)), 1) == 3


def test_dual_initial_formula_domain() -> None:
    params = make_params(2, 1, 3, 1)
    assert [dual_initial_formula(params, s) for s in range(1, 5)] == [4, 6, 7, 8]
    assert dual_recursive(params, 4) == [4, 6, 7, 8]
    with pytest.raises(DomainViolation):
        dual_recursive(params, 1)
    with pytest.raises(DomainViolation):
        dual_initial_formula(params, 5)
    with pytest.raises(DomainViolation):
        dual_initial_formula(make_params(2, 1, 1, 1), 1)


def test_dual_terminal_conventions() -> None:
    params = make_params(2, 2, 3, 2)
    assert list(dual_terminal_domain(params)) == list(range(35))
    assert dual_terminal_formula(params, 22) == 42
    assert dual_terminal_formula(params, 23) == 40
    assert dual_terminal_formula(params, 23, "literal") == 39
    assert dual_terminal_formula(params, 34) == 28
    with pytest.raises(DomainViolation):
        dual_terminal_formula(params, 35)

    transformed = dual_weight_report(params, (23, 23), mode="transform", side="terminal")
    assert transformed.values == [40]


def test_dual_terminal_recursion_matches_formula() -> None:
    params = make_params(2, 2, 3, 2)
    recursive = dual_terminal_recursive(params, 34)
    assert recursive == [dual_terminal_formula(params, s) for s in range(35)]
    assert recursive[:3] == [64, 63, 62]


def test_dual_weight_reports() -> None:
    report = dual_weight_report(None, (1, 6), q=3)
    assert report.values == [3, 5, 6, 7, 8, 9]
    assert {e.method for e in report.entries} == {"direct-formula"}
    assert dual_weight_report(None, (1, 6), mode="recursive", q=3).values == [3, 5, 6, 7, 8, 9]

    params = make_params(2, 1, 3, 1)
    transformed = dual_weight_report(params, (1, 4), mode="transform")
    assert transformed.values == [4, 6, 7, 8]
    assert transformed.G[3] == (7, 4)

    exact = exact_hierarchy(make_code(2, 1, 3, 1))
    assert dual_weight_report(params, (1, 4), mode="transform", primal=exact).values == [4, 6, 7, 8]

    with pytest.raises(DomainViolation):
        dual_weight_report(None, (0, 3), side="terminal", q=2)
    with pytest.raises(DomainViolation):
        dual_weight_report(None, (1, 3))
    with pytest.raises(OutOfRange):
        dual_weight_report(params, (3, 1))
