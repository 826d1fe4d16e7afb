from affgrass.reporting.models import CheckRecord, Report, ResultRow
from affgrass.reporting.render import render, render_csv, render_json, render_text

__all__ = ["CheckRecord", "Report", "ResultRow", "render", "render_csv", "render_json", "render_text"]
