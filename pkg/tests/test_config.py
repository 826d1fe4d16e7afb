from __future__ import annotations

import pytest

from affgrass.hierarchy import DEFAULT_SUBSPACE_BUDGET
from affgrass.utils.config import Settings, get_env_with_prefix, load_config, resolve_settings


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch, tmp_path) -> None:
    for name in ("AGW_BUDGET", "AGW_WORKERS", "AGW_POINT_BUDGET", "AGW_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)


def test_defaults() -> None:
    settings = resolve_settings(None)
    assert settings.subspace_budget == DEFAULT_SUBSPACE_BUDGET
    assert settings.workers == 1
    assert settings.runlog_dir is None
    assert settings.config_file is None


def test_yaml_file_and_sections(tmp_path) -> None:
    path = tmp_path / "run.yaml"
    path.write_text(
        "subspace_budget: 5000\nworkers: 2\npipeline:\n  slug: sweep\n",
        encoding="utf-8",
    )
    settings = resolve_settings(path)
    assert settings.subspace_budget == 5000
    assert settings.workers == 2
    assert settings.model_extra["pipeline"] == {"slug": "sweep"}
    assert settings.config_file == str(path)


def test_mapping_patches_config_path(tmp_path) -> None:
    path = tmp_path / "run.yaml"
    path.write_text("subspace_budget: 5000\npipeline:\n  slug: sweep\n  verbose: false\n", encoding="utf-8")
    settings = resolve_settings({"config_path": str(path), "pipeline": {"verbose": True}})
    assert settings.subspace_budget == 5000
    assert settings.model_extra["pipeline"] == {"slug": "sweep", "verbose": True}


def test_environment_overrides_file(tmp_path, monkeypatch) -> None:
    path = tmp_path / "run.yaml"
    path.write_text("subspace_budget: 5000\n", encoding="utf-8")
    monkeypatch.setenv("AGW_BUDGET", "123")
    assert get_env_with_prefix("BUDGET") == "123"
    assert resolve_settings(path).subspace_budget == 123


def test_variable_substitution(tmp_path, monkeypatch) -> None:
    monkeypatch.setenv("SWEEP_DIR", "/tmp/sweeps")
    path = tmp_path / "run.yaml"
    path.write_text("pipeline:\n  outputs_dir: ${SWEEP_DIR}/out\n", encoding="utf-8")
    assert load_config(path)["pipeline"]["outputs_dir"] == "/tmp/sweeps/out"


def test_invalid_settings(tmp_path) -> None:
    with pytest.raises(ValueError):
        resolve_settings({"workers": 0})
    with pytest.raises(FileNotFoundError):
        resolve_settings(tmp_path / "missing.yaml")
    toml_file = tmp_path / "settings.toml"
    toml_file.write_text("x = 1\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_config(toml_file)
    list_file = tmp_path / "list.yaml"
    list_file.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_config(list_file)
    with pytest.raises(TypeError):
        resolve_settings(42)


def test_settings_round_trip() -> None:
    settings = resolve_settings({"workers": 3})
    assert isinstance(resolve_settings(settings), Settings)
    assert resolve_settings(settings).workers == 3
