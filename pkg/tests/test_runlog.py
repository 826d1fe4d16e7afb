from __future__ import annotations

import json

from affgrass.observability.runlog import RunEventWriter, RunIndexBuilder, RunLog


def test_runlog_writes_index_and_jsonl(tmp_path) -> None:
    run_id = "run-1"
    run_dir = tmp_path / "runs" / run_id
    events_path = run_dir / "events.jsonl"
    index_path = run_dir / "index.json"

    writer = RunEventWriter(events_path, run_id)
    index = RunIndexBuilder(run_id)
    runlog = RunLog(writer, index, index_path)

    runlog.emit("RUN_START", {"command": "weights", "argv": ["weights", "exact"]})
    runlog.emit("SEARCH_DONE", {"r": 2, "weight": 6, "subspaces": 35})
    runlog.check("d2", 6, 6, True)
    runlog.check("d3", 7, 8, False)
    runlog.error("search", ValueError("boom"))
    runlog.artifact(run_dir / "report.json", "report")
    runlog.emit("RUN_END", {"status": "failed", "exit_code": 1})
    runlog.close()

    lines = events_path.read_text(encoding="utf-8").strip().splitlines()
    assert len(lines) == 7
    events = [json.loads(line) for line in lines]
    assert [event["seq"] for event in events] == list(range(1, 8))
    assert {event["run_id"] for event in events} == {run_id}

    index_data = json.loads(index_path.read_text(encoding="utf-8"))
    assert index_data["run_id"] == run_id
    assert index_data["command"] == "weights"
    assert index_data["status"] == "failed"
    assert index_data["last_seq"] == 7
    assert index_data["counts"] == {
        "events": 7,
        "checks": 2,
        "failed_checks": 1,
        "searches": 1,
        "errors": 1,
        "artifacts": 1,
    }
    assert index_data["failed_checks"][0]["name"] == "d3"
    assert index_data["searches"][0]["weight"] == 6
    assert index_data["errors"][0]["exception_type"] == "ValueError"
    assert index_data["artifacts"][0]["kind"] == "report"


def test_open_creates_files_and_numpy_payloads(tmp_path) -> None:
    import numpy as np

    with RunLog.open(tmp_path / "log", run_id="abc") as runlog:
        assert runlog.enabled
        seq = runlog.emit("SEARCH_DONE", {"r": np.int64(1), "witness": np.array([[1, 0]])})
        assert seq == 1

    event = json.loads((tmp_path / "log" / "events.jsonl").read_text(encoding="utf-8"))
    assert event["payload"] == {"r": 1, "witness": [[1, 0]]}
    assert (tmp_path / "log" / "index.json").exists()


def test_disabled_runlog_records_nothing(tmp_path) -> None:
    runlog = RunLog.open(None)
    assert not runlog.enabled
    assert runlog.emit("RUN_START", {}) == -1
    assert runlog.check("x", 1, 1, True) == -1
    runlog.close()
    assert list(tmp_path.iterdir()) == []
