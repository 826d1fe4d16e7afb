"""Second higher weight of C^A(ℓ, 2ℓ) against the conjectured value.

The exhaustive d_2 is compared with the weight of the two-leading-minor
subcode; a smaller exhaustive value is reported as a counterexample.  The
outcome is recorded, never asserted.
"""

from __future__ import annotations

from typing import Any

from loguru import logger

from affgrass.codes import build_code
from affgrass.errors import BudgetExceeded
from affgrass.formulas import conjecture_d2_value
from affgrass.grassmann import code_params
from affgrass.hierarchy import gaussian_binomial, search_min_support, witness_d2_upper
from affgrass.reporting import Report
from workflows.base import BaseWorkflow

DEFAULT_EXPERIMENT = {"levels": [2], "fields": [2]}


class D2ExperimentWorkflow(BaseWorkflow):
    def __init__(self, config: Any = "workflows/configs/d2_experiment.yaml"):
        super().__init__(config)
        experiment = {**DEFAULT_EXPERIMENT, **self.section("experiment")}
        self.levels = [int(l) for l in experiment["levels"]]
        self.fields = [int(q) for q in experiment["fields"]]

    def run_one(self, report: Report, l: int, q: int) -> None:
        params = code_params(q, l, l, l)
        conjectured = conjecture_d2_value(l, q)
        witness = witness_d2_upper(l, q, self.settings.point_budget)
        record = report.add_check(f"two-minor weight {params.label}", conjectured, witness.weight)
        self.runlog.check(record.name, record.expected, record.actual, record.passed)

        planes = gaussian_binomial(params.k, 2, q)
        code = build_code(params, self.settings.point_budget, self.settings.chunk_points)
        try:
            result = search_min_support(code, 2, self.settings.subspace_budget, self.settings.workers)
        except BudgetExceeded as exc:
            logger.info(f"{params.label}: {exc}")
            report.add_result("experiment", 2, None, "exhaustive", note=f"skipped: {exc}")
            return
        self.runlog.emit("SEARCH_DONE", {"params": params.to_dict(), "r": 2, "weight": result.weight, "subspaces": planes})
        outcome = "equal" if result.weight == conjectured else f"counterexample: conjecture {conjectured}"
        report.add_result(
            "experiment",
            2,
            result.weight,
            "exhaustive",
            witness=result.witness.to_dict(),
            note=f"{params.label}, {planes} planes, {outcome}",
        )

    def run(self) -> Report:
        report = Report(params={"levels": self.levels, "fields": self.fields})
        for l in self.levels:
            for q in self.fields:
                self.run_one(report, l, q)
        return report


if __name__ == "__main__":
    D2ExperimentWorkflow().execute()
