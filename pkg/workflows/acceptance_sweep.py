"""Exhaustive sweep of the closed forms over a grid of small codes.

For every code of the grid: the exhaustive minimum distance against the
closed form and the witness weights against their formulas.  For the
hierarchy list: every initial and terminal weight inside the search budget.
"""

from __future__ import annotations

from itertools import product
from typing import Any, Iterator

from loguru import logger

from affgrass.codes import build_code
from affgrass.errors import AffGrassError, BudgetExceeded
from affgrass.formulas import (
    griesmer_wei,
    initial_domain,
    initial_dr_formula,
    min_distance_formula,
    terminal_dr_formula,
)
from affgrass.grassmann import CodeParams, code_params
from affgrass.hierarchy import exact_dr, witness_initial, witness_terminal, zero_set_count
from affgrass.reporting import Report
from workflows.base import BaseWorkflow

DEFAULT_SWEEP = {
    "fields": [2, 3],
    "max_lp": 3,
    "max_length": 4096,
    "hierarchy": [[2, 1, 2, 1], [3, 1, 2, 1], [2, 1, 3, 1], [2, 2, 2, 1], [2, 2, 3, 2]],
}


class AcceptanceSweepWorkflow(BaseWorkflow):
    def __init__(self, config: Any = "workflows/configs/acceptance_sweep.yaml"):
        super().__init__(config)
        sweep = {**DEFAULT_SWEEP, **self.section("sweep")}
        self.fields = [int(q) for q in sweep["fields"]]
        self.max_lp = int(sweep["max_lp"])
        self.max_length = int(sweep["max_length"])
        self.hierarchy_params = [tuple(int(v) for v in spec) for spec in sweep["hierarchy"]]

    def grid(self) -> Iterator[CodeParams]:
        for q, l, lp in product(self.fields, range(1, self.max_lp + 1), range(1, self.max_lp + 1)):
            if l > lp or q ** (l * lp) > self.max_length:
                continue
            for h in range(1, l + 1):
                yield code_params(q, l, lp, h)

    def _check(self, report: Report, name: str, expected: Any, actual: Any) -> None:
        record = report.add_check(name, expected, actual)
        self.runlog.check(record.name, record.expected, record.actual, record.passed)

    def _minimum_distance(self, report: Report, params: CodeParams) -> None:
        code = build_code(params, self.settings.point_budget, self.settings.chunk_points)
        d1 = exact_dr(code, 1, self.settings.subspace_budget, self.settings.workers)
        self.runlog.emit("SEARCH_DONE", {"params": params.to_dict(), "r": 1, "weight": d1})
        self._check(report, f"min-distance {params.label}", min_distance_formula(params), d1)

    def _witnesses(self, report: Report, params: CodeParams) -> None:
        budget = self.settings.point_budget
        for r in initial_domain(params):
            try:
                weight = witness_initial(params, r, budget).weight
            except AffGrassError as exc:
                weight = str(exc)
            self._check(report, f"witness-initial {params.label} r={r}", initial_dr_formula(params, r), weight)
        for r in range(1, min(params.lp + 1, params.k) + 1):
            try:
                coeffs = witness_terminal(params, r, budget).subcode.coeffs
                zeros = zero_set_count(coeffs, params, budget)
            except AffGrassError as exc:
                zeros = str(exc)
            self._check(report, f"witness-terminal {params.label} r={r}", params.q ** (r - 1), zeros)

    def _hierarchy(self, report: Report, params: CodeParams) -> None:
        code = build_code(params, self.settings.point_budget, self.settings.chunk_points)
        budget, workers = self.settings.subspace_budget, self.settings.workers
        d1 = min_distance_formula(params)
        initial = set(initial_domain(params))
        terminal = {params.k - r for r in range(0, min(params.lp + 1, params.k) + 1)}
        for r in sorted(initial | terminal):
            try:
                value = exact_dr(code, r, budget, workers)
            except BudgetExceeded as exc:
                logger.info(f"{params.label}: skipping d_{r}, {exc}")
                report.add_result("experiment", r, None, "exhaustive", note=f"skipped: {exc}")
                continue
            self.runlog.emit("SEARCH_DONE", {"params": params.to_dict(), "r": r, "weight": value})
            report.add_result("primal", r, value, "exhaustive", note=params.label)
            if r in initial:
                self._check(report, f"initial {params.label} r={r}", initial_dr_formula(params, r), value)
                self._check(report, f"griesmer-wei {params.label} r={r}", griesmer_wei(d1, r, params.q), value)
            if r in terminal:
                self._check(report, f"terminal {params.label} r={params.k - r}", terminal_dr_formula(params, params.k - r), value)

    def run(self) -> Report:
        report = Report(params={"fields": self.fields, "max_lp": self.max_lp, "max_length": self.max_length})
        for params in self.grid():
            logger.info(f"sweeping {params.label}")
            self._minimum_distance(report, params)
            self._witnesses(report, params)
        for spec in self.hierarchy_params:
            self._hierarchy(report, code_params(*spec))
        return report


if __name__ == "__main__":
    AcceptanceSweepWorkflow().execute()
