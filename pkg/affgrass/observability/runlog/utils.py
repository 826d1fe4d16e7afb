from __future__ import annotations

import json
import os
import tempfile
from dataclasses import asdict, is_dataclass
from enum import Enum
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import BaseModel


def safe_json(value: Any, *, max_depth: int = 6) -> Any:
    """Best-effort conversion to JSON-serializable values."""
    return _safe_json(value, max_depth=max_depth, seen=set())


def _safe_json(value: Any, *, max_depth: int, seen: set[int]) -> Any:
    if max_depth < 0:
        return str(value)
    if value is None or isinstance(value, (str, bool, int, float)):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, np.generic):
        return value.item()

    value_id = id(value)
    if value_id in seen:
        return "<circular>"
    seen.add(value_id)
    try:
        if isinstance(value, BaseModel):
            return _safe_json(value.model_dump(mode="json"), max_depth=max_depth - 1, seen=seen)
        if isinstance(value, np.ndarray):
            return value.tolist()
        if hasattr(value, "to_dict") and callable(getattr(value, "to_dict")):
            return _safe_json(value.to_dict(), max_depth=max_depth - 1, seen=seen)
        if is_dataclass(value) and not isinstance(value, type):
            return _safe_json(asdict(value), max_depth=max_depth - 1, seen=seen)
        if isinstance(value, Path):
            return str(value)
        if isinstance(value, dict):
            return {
                str(key): _safe_json(item, max_depth=max_depth - 1, seen=seen)
                for key, item in value.items()
            }
        if isinstance(value, (list, tuple, set, frozenset)):
            return [_safe_json(item, max_depth=max_depth - 1, seen=seen) for item in value]
        return str(value)
    finally:
        seen.discard(value_id)


def atomic_write_text(path: Path, text: str) -> None:
    """Write through a temp file in the target directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    temp_path = None
    try:
        fd, tmp_name = tempfile.mkstemp(prefix=path.name, suffix=".tmp", dir=str(path.parent))
        temp_path = Path(tmp_name)
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(str(temp_path), str(path))
    finally:
        if temp_path and temp_path.exists():
            try:
                temp_path.unlink()
            except OSError:
                pass


def atomic_write_json(path: Path, data: Any) -> None:
    atomic_write_text(path, json.dumps(safe_json(data), ensure_ascii=False, indent=2))
