from __future__ import annotations

import uuid
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional

from affgrass.observability.runlog.index import RunIndexBuilder
from affgrass.observability.runlog.utils import atomic_write_json
from affgrass.observability.runlog.writer import RunEventWriter

EVENTS_FILE = "events.jsonl"
INDEX_FILE = "index.json"


class RunLog:
    """Emits run events and writes the index on close."""

    def __init__(self, writer: Optional[RunEventWriter], index: RunIndexBuilder, index_path: Optional[Path]) -> None:
        self._writer = writer
        self._index = index
        self._index_path = Path(index_path) if index_path is not None else None
        self.run_id = index.run_id

    @classmethod
    def open(cls, directory: Optional[Path], run_id: Optional[str] = None) -> "RunLog":
        """A run log under ``directory``; ``None`` gives one that records nothing."""
        run_id = run_id or uuid.uuid4().hex[:12]
        index = RunIndexBuilder(run_id)
        if directory is None:
            return cls(None, index, None)
        directory = Path(directory)
        return cls(RunEventWriter(directory / EVENTS_FILE, run_id), index, directory / INDEX_FILE)

    @property
    def enabled(self) -> bool:
        return self._writer is not None

    def emit(self, type: str, payload: dict) -> int:
        if self._writer is None or not type:
            return -1
        try:
            event = {
                "schema_version": 1,
                "run_id": self.run_id,
                "ts": _utc_timestamp(),
                "type": type,
                "payload": payload,
            }
            seq = self._writer.write(event)
            if seq == -1:
                return -1
            self._index.on_event(event, seq)
            return seq
        except Exception:
            return -1

    def check(self, name: str, expected: Any, actual: Any, passed: bool) -> int:
        return self.emit("CHECK", {"name": name, "expected": expected, "actual": actual, "pass": bool(passed)})

    def error(self, where: str, exc: BaseException) -> int:
        return self.emit(
            "ERROR",
            {"where": where, "exception_type": type(exc).__name__, "message": str(exc)},
        )

    def artifact(self, path: Path, kind: str) -> int:
        return self.emit("ARTIFACT_WRITTEN", {"path": str(path), "kind": kind})

    def close(self) -> None:
        if self._writer is None:
            return
        try:
            if self._index_path is not None:
                atomic_write_json(self._index_path, self._index.finalize())
        except Exception:
            pass
        try:
            self._writer.close()
        except Exception:
            pass

    def __enter__(self) -> "RunLog":
        return self

    def __exit__(self, *exc_info: object) -> None:
        self.close()


def _utc_timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")
