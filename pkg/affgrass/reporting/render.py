"""Report renderers: json (pydantic), csv (pandas), text (rich)."""

from __future__ import annotations

import json
from io import StringIO
from typing import Literal

import pandas as pd
from rich.console import Console
from rich.table import Table

from affgrass.reporting.models import Report

OutputFormat = Literal["json", "csv", "text"]

COLUMNS = ["section", "kind", "r_or_s", "value", "method", "note", "name", "expected", "pass"]


def render_json(report: Report) -> str:
    return report.model_dump_json(indent=2, by_alias=True) + "\n"


def _cell(value):
    return json.dumps(value) if isinstance(value, (dict, list)) else value


def _result_frame(report: Report) -> pd.DataFrame:
    rows = [
        {
            "section": "result",
            "kind": row.kind,
            "r_or_s": row.r_or_s,
            "value": _cell(row.value),
            "method": row.method,
            "note": row.note,
            "name": None,
            "expected": None,
            "pass": None,
        }
        for row in report.results
    ]
    rows += [
        {
            "section": "check",
            "kind": None,
            "r_or_s": None,
            "value": _cell(check.actual),
            "method": None,
            "note": None,
            "name": check.name,
            "expected": _cell(check.expected),
            "pass": check.passed,
        }
        for check in report.checks
    ]
    # object columns keep integers exact next to empty cells
    return pd.DataFrame(rows, columns=COLUMNS, dtype=object)


def render_csv(report: Report) -> str:
    return _result_frame(report).to_csv(index=False, lineterminator="\n")


def render_text(report: Report, width: int = 120) -> str:
    buffer = StringIO()
    console = Console(file=buffer, width=width, color_system=None, highlight=False)
    if report.params:
        console.print(" ".join(f"{k}={v}" for k, v in report.params.items()))
    if report.results:
        table = Table(title="results")
        for name in ("kind", "r/s", "value", "method", "note"):
            table.add_column(name)
        for row in report.results:
            table.add_row(
                row.kind,
                "" if row.r_or_s is None else str(row.r_or_s),
                str(row.value),
                row.method,
                row.note or "",
            )
        console.print(table)
    if report.checks:
        table = Table(title=f"checks ({len(report.checks) - len(report.failed)}/{len(report.checks)} passed)")
        for name in ("check", "expected", "actual", "status"):
            table.add_column(name)
        for check in report.checks:
            table.add_row(check.name, str(check.expected), str(check.actual), "PASS" if check.passed else "FAIL")
        console.print(table)
    return buffer.getvalue()


RENDERERS = {"json": render_json, "csv": render_csv, "text": render_text}


def render(report: Report, fmt: OutputFormat = "json") -> str:
    return RENDERERS[fmt](report)
