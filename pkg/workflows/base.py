import datetime
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, Iterator, Mapping, Optional, Union

from loguru import logger
from rich.console import Console

from affgrass.observability.runlog import RunLog
from affgrass.observability.runlog.utils import atomic_write_text
from affgrass.reporting import Report, render_json, render_text
from affgrass.utils import Settings, configure_logging, resolve_settings


def get_experiment_timestamp() -> str:
    """Get timestamp for experiment naming."""
    return datetime.datetime.now().strftime("%Y%m%d_%H%M%S")


class BaseWorkflow:
    """Base class for scripted runs over the library."""

    def __init__(self, config: Union[str, Path, Mapping[str, Any], Settings, None] = None):
        """Initialize the workflow using a single configuration input.

        Args:
            config: Configuration specification:
                - str/Path: Load YAML/JSON file
                - dict with 'config_path': Load file, then deep-merge dict on top (dict wins)
                - dict without 'config_path': Use as-is
                - Settings: Use as-is

        Examples:
            AcceptanceSweepWorkflow("workflows/configs/acceptance_sweep.yaml")

            D2ExperimentWorkflow({
                "config_path": "workflows/configs/d2_experiment.yaml",
                "experiment": {"levels": [2]},
            })
        """
        self.console = Console()
        self.settings = resolve_settings(config)
        configure_logging(self.settings.log_level)

        self.experiment_id = get_experiment_timestamp()
        pipeline = self.section("pipeline")
        default_slug = self.__class__.__name__.replace("Workflow", "").lower()
        self.pipeline_slug = pipeline.get("slug") or default_slug
        self.workflow_name = pipeline.get("workflow_name") or f"{self.pipeline_slug}_{self.experiment_id}"
        self.outputs_dir = Path(pipeline.get("outputs_dir", "outputs"))
        self.verbose = pipeline.get("verbose", True)
        self.start_time: Optional[float] = None
        self.runlog: RunLog = RunLog.open(None)

    def section(self, name: str) -> Dict[str, Any]:
        """A top-level mapping of the config file (empty when absent)."""
        value = (self.settings.model_extra or {}).get(name) or {}
        if not isinstance(value, Mapping):
            raise ValueError(f"config section {name!r} must be a mapping")
        return dict(value)

    @property
    def run_dir(self) -> Path:
        return self.outputs_dir / self.pipeline_slug / self.experiment_id

    @contextmanager
    def run_context(self) -> Iterator[RunLog]:
        """Open the run log, bracket the run with RUN_START/RUN_END, always close."""
        self.start_time = time.time()
        runlog_dir = self.settings.runlog_dir or self.run_dir
        self.runlog = RunLog.open(runlog_dir, run_id=self.experiment_id)
        logger.info(f"Running {self.__class__.__name__} with experiment_id: {self.experiment_id}")
        self.runlog.emit(
            "RUN_START",
            {
                "pipeline_slug": self.pipeline_slug,
                "workflow_name": self.workflow_name,
                "experiment_id": self.experiment_id,
                "settings": self.settings.to_dict(),
            },
        )
        status = "success"
        error_message: Optional[str] = None
        try:
            yield self.runlog
        except Exception as exc:
            status = "error"
            error_message = str(exc)
            self.runlog.error(self.pipeline_slug, exc)
            raise
        finally:
            self.runlog.emit(
                "RUN_END",
                {
                    "status": status,
                    "error": error_message,
                    "elapsed_seconds": round(time.time() - self.start_time, 3),
                },
            )
            self.runlog.close()

    def run(self) -> Report:
        raise NotImplementedError

    def execute(self) -> Report:
        """Run inside the run context and persist the report."""
        with self.run_context():
            report = self.run()
            path = self.run_dir / "report.json"
            atomic_write_text(path, render_json(report))
            self.runlog.artifact(path, "report")
        if self.verbose:
            self.console.print(render_text(report))
        return report
