"""
Settings resolution for affgrass runs.

Settings come from defaults, an optional YAML/JSON file, a mapping of
overrides and finally AGW_* environment variables (a ``.env`` file is loaded
first).
"""

from __future__ import annotations

import json
import os
import re
from pathlib import Path
from typing import Any, Dict, Mapping, MutableMapping, Optional, Union

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from affgrass.grassmann.counting import DEFAULT_CHUNK, DEFAULT_POINT_BUDGET
from affgrass.hierarchy.enumeration import DEFAULT_SUBSPACE_BUDGET

ENV_PREFIX = "AGW_"

# setting name -> environment variable base name
ENV_OVERRIDES = {
    "subspace_budget": "BUDGET",
    "workers": "WORKERS",
    "point_budget": "POINT_BUDGET",
    "log_level": "LOG_LEVEL",
}


def get_env_with_prefix(base_name: str, prefix: str = ENV_PREFIX, default: Optional[str] = None) -> Optional[str]:
    """
    Retrieves a prefixed environment variable.

    Args:
        base_name: The base name of the variable (e.g., "BUDGET").
        prefix: The prefix to prepend. Defaults to "AGW_".
        default: Returned when the variable is not set.
    """
    return os.getenv(f"{prefix}{base_name}", default)


def _substitute_env_vars(obj: Any) -> Any:
    """Recursively substitute ${VAR_NAME} with environment variable values."""
    if isinstance(obj, dict):
        return {k: _substitute_env_vars(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_substitute_env_vars(item) for item in obj]
    if isinstance(obj, str):
        result = obj
        for var_name in re.findall(r"\$\{([^}]+)\}", obj):
            result = result.replace(f"${{{var_name}}}", os.getenv(var_name, ""))
        return result
    return obj


def load_config(config_file: Union[str, Path]) -> Dict[str, Any]:
    """Load a YAML or JSON mapping with ${VAR} substitution."""
    config_path = Path(config_file)
    if not config_path.exists():
        raise FileNotFoundError(f"Config file not found: {config_file}")
    with open(config_path, "r", encoding="utf-8") as f:
        if config_path.suffix in (".yaml", ".yml"):
            data = yaml.safe_load(f)
        elif config_path.suffix == ".json":
            data = json.load(f)
        else:
            raise ValueError(f"Unsupported config file format: {config_path.suffix}")
    data = data or {}
    if not isinstance(data, MutableMapping):
        raise ValueError(f"Configuration file must define a mapping, got {type(data)!r}")
    return _substitute_env_vars(dict(data))


def _deep_merge(base: Dict[str, Any], override: Mapping[str, Any]) -> Dict[str, Any]:
    out = dict(base)
    for k, v in (override or {}).items():
        if isinstance(v, Mapping) and isinstance(out.get(k), Mapping):
            out[k] = _deep_merge(dict(out[k]), v)
        else:
            out[k] = v
    return out


class Settings(BaseModel):
    """Budgets and run options shared by the CLI and the workflows."""

    subspace_budget: int = Field(default=DEFAULT_SUBSPACE_BUDGET, ge=1)
    point_budget: int = Field(default=DEFAULT_POINT_BUDGET, ge=1)
    workers: int = Field(default=1, ge=1)
    chunk_points: int = Field(default=DEFAULT_CHUNK, ge=1)
    log_level: str = "WARNING"
    runlog_dir: Optional[Path] = None
    config_file: Optional[str] = Field(default=None, exclude=True)

    model_config = ConfigDict(extra="allow")

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", exclude_none=True)


def _env_overrides() -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    for key, name in ENV_OVERRIDES.items():
        value = get_env_with_prefix(name)
        if value not in (None, ""):
            out[key] = value
    return out


def resolve_settings(spec: Union[None, str, Path, Mapping[str, Any], Settings] = None) -> Settings:
    """Resolve settings from a file path, a mapping (optionally with
    ``config_path`` to patch a file) or an existing Settings, then apply
    AGW_* environment overrides.

    Raises:
        ValueError: when the merged values fail validation.
    """
    load_dotenv()

    config_file: Optional[str] = None
    if spec is None:
        raw: Dict[str, Any] = {}
    elif isinstance(spec, Settings):
        raw = spec.to_dict()
        config_file = spec.config_file
    elif isinstance(spec, (str, Path)):
        raw = load_config(spec)
        config_file = str(spec)
    elif isinstance(spec, Mapping):
        spec_dict = dict(spec)
        config_path = spec_dict.pop("config_path", None)
        if config_path:
            raw = _deep_merge(load_config(config_path), spec_dict)
            config_file = str(config_path)
        else:
            raw = spec_dict
    else:
        raise TypeError(f"spec must be None, str, Path, Mapping, or Settings; got {type(spec).__name__}")

    raw = _deep_merge(_substitute_env_vars(raw), _env_overrides())
    try:
        settings = Settings.model_validate(raw)
    except ValidationError as e:
        raise ValueError(f"Failed to validate settings: {e}") from e
    settings.config_file = config_file
    return settings


__all__ = [
    "ENV_PREFIX",
    "Settings",
    "get_env_with_prefix",
    "load_config",
    "resolve_settings",
]
