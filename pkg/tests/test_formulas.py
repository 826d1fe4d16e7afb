from __future__ import annotations

import pytest

from affgrass.errors import DomainViolation, WitnessMismatch
from affgrass.formulas import (
    check_monotone,
    conjecture_d2_value,
    formula_hierarchy,
    gl_order,
    griesmer_wei,
    griesmer_wei_check,
    initial_domain,
    initial_dr_formula,
    intersection_count_formula,
    min_distance_formula,
    terminal_domain,
    terminal_dr_formula,
    tsfasman_vladut_check,
)
from affgrass.codes import build_code
from affgrass.hierarchy import (
    EntryStatus,
    WeightHierarchy,
    exact_dr,
    exact_hierarchy,
    gaussian_binomial,
    inclusion_exclusion_union,
    initial_family,
    witness_d2_upper,
    witness_initial,
    witness_terminal,
    zero_set_count,
)
from affgrass.verification import parameter_grid
from tests.utils import make_code, make_params


def test_gl_order() -> None:
    assert gl_order(1, 5) == 4
    assert gl_order(2, 2) == 6
    assert gl_order(3, 2) == 168
    assert gl_order(2, 3) == 48


def test_minimum_distance() -> None:
    assert min_distance_formula(make_params(2, 2, 3, 2)) == 24
    assert min_distance_formula(make_params(3, 1, 2, 1)) == 6
    assert min_distance_formula(make_params(2, 2, 2, 2)) == 6
    assert min_distance_formula(make_params(4, 2, 4, 1)) == 3 * 4 ** 7


def test_initial_weights() -> None:
    params = make_params(2, 2, 3, 2)
    assert list(initial_domain(params)) == [1, 2, 3]
    assert [initial_dr_formula(params, r) for r in initial_domain(params)] == [24, 36, 42]
    assert initial_dr_formula(make_params(2, 1, 2, 1), 2) == 3
    with pytest.raises(DomainViolation):
        initial_dr_formula(params, 4)

    square = make_params(2, 2, 2, 2)
    assert list(initial_domain(square)) == [1]
    with pytest.raises(DomainViolation):
        initial_dr_formula(square, 2)

    wide = make_params(3, 2, 6, 1)
    assert list(initial_domain(wide)) == [1, 2, 3, 4, 5, 6]


@pytest.mark.parametrize("spec", [(2, 2, 3, 2), (3, 2, 5, 2), (4, 1, 3, 1), (2, 3, 4, 2)])
def test_initial_weights_meet_griesmer_wei(spec: tuple) -> None:
    params = make_params(*spec)
    d = min_distance_formula(params)
    for r in initial_domain(params):
        assert initial_dr_formula(params, r) == griesmer_wei(d, r, params.q)


def test_terminal_weights() -> None:
    params = make_params(2, 2, 3, 2)
    assert terminal_dr_formula(params, 0) == 64
    assert [terminal_dr_formula(params, r) for r in range(1, 5)] == [63, 62, 60, 56]
    assert list(terminal_domain(params)) == [0, 1, 2, 3, 4]
    with pytest.raises(DomainViolation):
        terminal_dr_formula(params, 5)


def test_griesmer_and_conjecture_values() -> None:
    assert griesmer_wei(24, 3, 2) == 42
    assert griesmer_wei(6, 2, 3) == 8
    assert conjecture_d2_value(2, 2) == 10
    assert conjecture_d2_value(1, 2) == 2
    assert conjecture_d2_value(2, 3) == 66
    assert intersection_count_formula(make_params(2, 2, 3, 2), 3) == 6


def test_formula_hierarchy() -> None:
    small = formula_hierarchy(make_params(2, 1, 2, 1))
    assert small.d == [0, 2, 3, 4]
    assert small.d == exact_hierarchy(make_code(2, 1, 2, 1)).d

    params = make_params(2, 2, 3, 2)
    hierarchy = formula_hierarchy(params)
    assert hierarchy.d == [0, 24, 36, 42, None, None, 56, 60, 62, 63, 64]
    assert hierarchy.status[4] == EntryStatus.UNKNOWN
    assert hierarchy.status[6] == EntryStatus.FORMULA


def test_bound_checks() -> None:
    good = WeightHierarchy.exact(8, [4, 6, 7, 8])
    assert check_monotone(good) == []
    assert griesmer_wei_check(good, 2) == []
    assert tsfasman_vladut_check(good, 2) == []

    flat = WeightHierarchy.exact(4, [2, 2, 4])
    violations = check_monotone(flat)
    assert [(v.r, v.s) for v in violations] == [(1, 2)]

    low = WeightHierarchy.exact(8, [4, 5, 7, 8])
    assert [v.s for v in griesmer_wei_check(low, 2)] == [2]
    assert "griesmer-wei" in str(griesmer_wei_check(low, 2)[0])


def test_initial_witnesses() -> None:
    params = make_params(2, 2, 3, 2)
    assert [m.label for m in initial_family(params, 3)] == ["[1,2|2,3]", "[1,2|1,3]", "[1,2|1,2]"]
    two = witness_initial(params, 2)
    assert two.weight == 36
    assert two.subcode.rank == 2
    assert witness_initial(params, 3).weight == 42
    assert inclusion_exclusion_union(params, 2) == 36
    assert inclusion_exclusion_union(params, 3) == 42
    assert witness_initial(make_params(2, 1, 2, 1), 2).weight == 3
    with pytest.raises(DomainViolation):
        witness_initial(params, 4)


def test_terminal_witnesses() -> None:
    params = make_params(2, 2, 3, 2)
    assert witness_terminal(params, 1).weight == 63
    four = witness_terminal(params, 4)
    assert four.weight == 56
    assert four.subcode.rank == params.k - 4
    assert zero_set_count(witness_terminal(params, 3).subcode.coeffs, params) == 4
    with pytest.raises(DomainViolation):
        witness_terminal(params, 5)


def test_two_minor_witness() -> None:
    witness = witness_d2_upper(2, 2)
    assert witness.weight == 10
    assert [m.label for m in witness.minors] == ["[1,2|1,2]", "X11"]
    assert witness_d2_upper(2, 3).weight == 66


def test_witness_mismatch_is_reported(monkeypatch) -> None:
    import affgrass.hierarchy.witnesses as witnesses

    monkeypatch.setattr(witnesses, "initial_dr_formula", lambda params, r: -1)
    with pytest.raises(WitnessMismatch):
        witnesses.witness_initial(make_params(2, 1, 2, 1), 1)


SEARCH_CAP = 200_000


@pytest.mark.slow
def test_closed_forms_match_search_over_small_grid() -> None:
    grid = list(parameter_grid(fields=(2, 3), max_side=3))
    assert len(grid) == 17
    checked = 0
    for params in grid:
        code = build_code(params)
        initial = {r for r in initial_domain(params) if r <= params.k}
        terminal = {params.k - t: t for t in terminal_domain(params)}
        for r in sorted(initial | set(terminal)):
            if r == 0 or gaussian_binomial(params.k, r, params.q) > SEARCH_CAP:
                continue
            found = exact_dr(code, r)
            if r == 1:
                assert found == min_distance_formula(params), params.label
            if r in initial:
                assert found == initial_dr_formula(params, r), (params.label, r)
            if r in terminal:
                assert found == terminal_dr_formula(params, terminal[r]), (params.label, r)
            checked += 1
    assert checked > 17
