from __future__ import annotations

from typing import Any, Optional

from affgrass.observability.runlog.utils import safe_json


class RunIndexBuilder:
    """Folds the event stream into a summary written next to it."""

    def __init__(self, run_id: str) -> None:
        self.run_id = str(run_id)
        self._started_at: Optional[str] = None
        self._ended_at: Optional[str] = None
        self._status: Optional[str] = None
        self._command: Optional[str] = None
        self._last_seq: Optional[int] = None
        self._counts: dict[str, int] = {
            "events": 0,
            "checks": 0,
            "failed_checks": 0,
            "searches": 0,
            "errors": 0,
            "artifacts": 0,
        }
        self._failed: list[dict[str, Any]] = []
        self._searches: list[dict[str, Any]] = []
        self._errors: list[dict[str, Any]] = []
        self._artifacts: list[dict[str, Any]] = []

    def on_event(self, event: dict, seq: int) -> None:
        try:
            self._counts["events"] += 1
            if self._last_seq is None or seq > self._last_seq:
                self._last_seq = seq
            event_type = event.get("type")
            ts = event.get("ts")
            payload = event.get("payload") if isinstance(event.get("payload"), dict) else {}

            if event_type == "RUN_START":
                self._started_at = ts
                self._command = payload.get("command")
            elif event_type == "RUN_END":
                self._ended_at = ts
                status = payload.get("status")
                if isinstance(status, str):
                    self._status = status
            elif event_type == "CHECK":
                self._counts["checks"] += 1
                if not payload.get("pass"):
                    self._counts["failed_checks"] += 1
                    self._failed.append({"seq": seq, **payload})
            elif event_type == "SEARCH_DONE":
                self._counts["searches"] += 1
                self._searches.append(
                    {
                        "seq": seq,
                        "r": payload.get("r"),
                        "weight": payload.get("weight"),
                        "subspaces": payload.get("subspaces"),
                    }
                )
            elif event_type == "ERROR":
                self._counts["errors"] += 1
                self._errors.append(
                    {
                        "seq": seq,
                        "ts": ts,
                        "where": payload.get("where"),
                        "exception_type": payload.get("exception_type"),
                        "message": payload.get("message"),
                    }
                )
            elif event_type == "ARTIFACT_WRITTEN":
                self._counts["artifacts"] += 1
                self._artifacts.append({"seq": seq, "path": payload.get("path"), "kind": payload.get("kind")})
        except Exception:
            return

    def finalize(self) -> dict:
        return safe_json(
            {
                "schema_version": 1,
                "run_id": self.run_id,
                "command": self._command,
                "started_at": self._started_at,
                "ended_at": self._ended_at,
                "status": self._status,
                "last_seq": self._last_seq,
                "counts": dict(self._counts),
                "failed_checks": list(self._failed),
                "searches": list(self._searches),
                "errors": list(self._errors),
                "artifacts": list(self._artifacts),
            }
        )
