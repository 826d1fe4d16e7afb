from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

ResultKind = Literal[
    "param",
    "primal",
    "dual_initial",
    "dual_terminal",
    "table",
    "experiment",
]


class ResultRow(BaseModel):
    kind: ResultKind
    r_or_s: Optional[int] = None
    value: Any
    method: str
    witness: Optional[dict[str, Any]] = None
    note: Optional[str] = None


class CheckRecord(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    name: str
    expected: Any
    actual: Any
    passed: bool = Field(alias="pass")

    def to_dict(self) -> dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True)


class Report(BaseModel):
    """Uniform output of every subcommand."""

    params: Optional[dict[str, Any]] = None
    results: list[ResultRow] = Field(default_factory=list)
    checks: list[CheckRecord] = Field(default_factory=list)

    @property
    def failed(self) -> list[CheckRecord]:
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failed

    def add_result(self, kind: ResultKind, r_or_s: Optional[int], value: Any, method: str, **extra: Any) -> ResultRow:
        row = ResultRow(kind=kind, r_or_s=r_or_s, value=value, method=method, **extra)
        self.results.append(row)
        return row

    def add_check(self, name: str, expected: Any, actual: Any, passed: Optional[bool] = None) -> CheckRecord:
        record = CheckRecord(
            name=name,
            expected=expected,
            actual=actual,
            passed=(expected == actual) if passed is None else passed,
        )
        self.checks.append(record)
        return record
