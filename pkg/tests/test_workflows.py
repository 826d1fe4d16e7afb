from __future__ import annotations

import json

import pytest

from workflows.acceptance_sweep import AcceptanceSweepWorkflow
from workflows.base import BaseWorkflow
from workflows.d2_experiment import D2ExperimentWorkflow


def _config(tmp_path, **sections) -> dict:
    return {"pipeline": {"outputs_dir": str(tmp_path / "outputs"), "verbose": False}, **sections}


def test_base_workflow_sections(tmp_path) -> None:
    workflow = BaseWorkflow(_config(tmp_path, pipeline={"slug": "demo", "outputs_dir": str(tmp_path)}))
    assert workflow.pipeline_slug == "demo"
    assert workflow.section("missing") == {}
    assert workflow.run_dir.parent == tmp_path / "demo"
    with pytest.raises(NotImplementedError):
        workflow.run()


def test_failed_run_is_logged(tmp_path) -> None:
    workflow = BaseWorkflow(_config(tmp_path))
    with pytest.raises(NotImplementedError):
        workflow.execute()
    events = (workflow.run_dir / "events.jsonl").read_text(encoding="utf-8").splitlines()
    assert json.loads(events[-1])["payload"]["status"] == "error"


def test_acceptance_sweep_small_grid(tmp_path) -> None:
    workflow = AcceptanceSweepWorkflow(
        _config(tmp_path, sweep={"fields": [2], "max_lp": 2, "hierarchy": [[2, 1, 2, 1]]})
    )
    assert [(p.l, p.lp, p.h) for p in workflow.grid()] == [(1, 1, 1), (1, 2, 1), (2, 2, 1), (2, 2, 2)]
    report = workflow.execute()
    assert report.ok
    assert [row.value for row in report.results if row.kind == "primal"] == [0, 2, 3, 4]
    assert (workflow.run_dir / "report.json").exists()
    index = json.loads((workflow.run_dir / "index.json").read_text(encoding="utf-8"))
    assert index["status"] == "success"
    assert index["counts"]["failed_checks"] == 0


def test_acceptance_sweep_skips_over_budget(tmp_path) -> None:
    config = _config(tmp_path, sweep={"fields": [2], "max_lp": 1, "hierarchy": [[2, 2, 2, 1]]})
    config["subspace_budget"] = 20
    report = AcceptanceSweepWorkflow(config).execute()
    skipped = [row for row in report.results if row.kind == "experiment"]
    assert skipped
    assert all(row.note.startswith("skipped") for row in skipped)


def test_d2_experiment_records_outcome(tmp_path) -> None:
    report = D2ExperimentWorkflow(_config(tmp_path, experiment={"levels": [2], "fields": [2]})).execute()
    assert report.ok
    (row,) = report.results
    assert row.kind == "experiment"
    assert 9 <= row.value <= 10
    assert "651 planes" in row.note
