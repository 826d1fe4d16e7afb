"""Self-describing JSON records for built codes."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ValidationError

from affgrass.codes.linear import LinearCode
from affgrass.errors import AffGrassError, RecordError
from affgrass.field import field_from_order
from affgrass.grassmann.params import code_params
from affgrass.observability.runlog.utils import atomic_write_text


class CodeRecord(BaseModel):
    q: int
    modulus: list[int]
    l: Optional[int] = None
    lp: Optional[int] = None
    h: Optional[int] = None
    n: int
    k: int
    tag: str = "custom"
    rows: list[list[int]]


def to_record(code: LinearCode) -> CodeRecord:
    F = code.field
    p = code.params
    return CodeRecord(
        q=F.order,
        modulus=list(F.modulus or ()),
        l=p.l if p else None,
        lp=p.lp if p else None,
        h=p.h if p else None,
        n=code.length,
        k=code.dimension,
        tag=code.tag,
        rows=code.generator.astype(int).tolist(),
    )


def from_record(record: CodeRecord) -> LinearCode:
    try:
        F = field_from_order(record.q)
    except AffGrassError as exc:
        raise RecordError(f"record field is unusable: {exc}") from exc
    if list(F.modulus or ()) != record.modulus:
        raise RecordError(f"record modulus {record.modulus} does not match GF({record.q}) modulus {list(F.modulus or ())}")
    if len(record.rows) != record.k or any(len(row) != record.n for row in record.rows):
        raise RecordError(f"record rows do not form a {record.k}x{record.n} matrix")
    if any(not 0 <= v < F.order for row in record.rows for v in row):
        raise RecordError(f"record holds entries outside GF({record.q})")
    params = None
    if None not in (record.l, record.lp, record.h):
        try:
            params = code_params(record.q, record.l, record.lp, record.h)
        except AffGrassError as exc:
            raise RecordError(f"record parameters are invalid: {exc}") from exc
        expected_k = params.n - params.k if record.tag == "dual" else params.k
        if (params.n, expected_k) != (record.n, record.k):
            raise RecordError(f"record shape {record.k}x{record.n} disagrees with {params.label}")
    try:
        return LinearCode.from_generator(F, record.rows, length=record.n, params=params, tag=record.tag)
    except AffGrassError as exc:
        raise RecordError(str(exc)) from exc


def store_code(code: LinearCode, path: Path) -> Path:
    path = Path(path)
    atomic_write_text(path, to_record(code).model_dump_json())
    return path


def load_code(path: Path) -> LinearCode:
    try:
        record = CodeRecord.model_validate_json(Path(path).read_text(encoding="utf-8"))
    except (OSError, ValidationError) as exc:
        raise RecordError(f"cannot read code record {path}: {exc}") from exc
    return from_record(record)
