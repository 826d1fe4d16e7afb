from __future__ import annotations

import pytest

from affgrass.utils.config import Settings
from affgrass.verification import SUITES, SuiteContext, acceptance_params, parameter_grid, run_suite


def test_parameter_grid() -> None:
    grid = list(parameter_grid(fields=[2]))
    assert len(grid) == 28
    assert all(p.n <= 2 ** 12 for p in grid)
    assert all(1 <= p.h <= p.l <= p.lp for p in grid)
    assert (grid[0].l, grid[0].lp, grid[0].h) == (1, 1, 1)
    assert [p.label for p in acceptance_params()][-1] == "C^A(2,5;2) over GF(2)"


def test_suite_context_caps_searches() -> None:
    assert SuiteContext().search_budget == 200_000
    assert SuiteContext(Settings(subspace_budget=50)).search_budget == 50


def test_table1_suite() -> None:
    checks = run_suite("table1")
    assert len(checks) == 27 * 11
    assert all(c.passed for c in checks)


def test_unknown_suite() -> None:
    with pytest.raises(KeyError):
        run_suite("nope")
    assert set(SUITES) == {"lemma-a", "lemma-b", "minors", "witnesses", "duality", "table1", "bounds"}


@pytest.mark.slow
@pytest.mark.parametrize("name", ["lemma-a", "lemma-b", "minors", "witnesses", "duality", "bounds"])
def test_suites_pass(name: str) -> None:
    checks = run_suite(name)
    assert checks
    assert [c.name for c in checks if not c.passed] == []
