"""Run observability: JSONL event stream plus a run index."""
