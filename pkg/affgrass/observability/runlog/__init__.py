"""Run logs: a JSONL event stream plus a folded index per run."""

from affgrass.observability.runlog.index import RunIndexBuilder
from affgrass.observability.runlog.runlog import RunLog
from affgrass.observability.runlog.writer import RunEventWriter

__all__ = ["RunIndexBuilder", "RunLog", "RunEventWriter"]
