"""Command-line front end.

    affgrass params  --q 2 --l 1 --lp 2 --h 1
    affgrass build   --q 2 --l 1 --lp 2 --h 1 --output code.json
    affgrass weights exact   --q 2 --l 1 --m 3 --h 1 --r 1..3
    affgrass weights formula --q 4 --l 2 --lp 4 --h 1
    affgrass weights dual --mode formula --q 3 --s 1..6
    affgrass verify table1

Exit status: 0 on success, 1 when a verification check fails, 2 on usage or
domain errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Literal, Optional, Sequence

from loguru import logger
from pydantic import BaseModel, Field, ValidationError, model_validator

from affgrass.codes import build_code, load_code, to_record
from affgrass.errors import AffGrassError
from affgrass.formulas import (
    dual_terminal_domain,
    dual_weight_report,
    formula_hierarchy,
    initial_domain,
    q_sequence,
    table1,
    table_csv,
)
from affgrass.grassmann import CodeParams, code_params
from affgrass.hierarchy import EntryStatus, exact_hierarchy, search_min_support
from affgrass.observability.runlog import RunLog
from affgrass.observability.runlog.utils import atomic_write_text
from affgrass.reporting import Report, render
from affgrass.utils import Settings, configure_logging, resolve_settings
from affgrass.verification import SUITES, SuiteContext, run_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# s-range used by `weights dual` when --s is omitted and no code is given
DEFAULT_DUAL_ROWS = 27


class UsageError(Exception):
    """A flag is missing, malformed or inconsistent with the others."""


class RunConfig(BaseModel):
    """One parsed invocation."""

    command: Literal["params", "build", "weights", "verify"]
    action: Optional[str] = None
    q: Optional[int] = None
    l: Optional[int] = None
    lp: Optional[int] = None
    h: Optional[int] = None
    r_range: Optional[tuple[int, int]] = None
    s_range: Optional[tuple[int, int]] = None
    budget: Optional[int] = Field(default=None, ge=1)
    workers: Optional[int] = Field(default=None, ge=1)
    mode: Literal["formula", "recursive", "transform"] = "formula"
    side: Literal["initial", "terminal"] = "initial"
    convention: Literal["corollary", "literal"] = "corollary"
    with_exact: bool = False
    code: Optional[Path] = None
    output: Optional[Path] = None
    format: Literal["json", "csv", "text"] = "json"
    config: Optional[Path] = None
    runlog: Optional[Path] = None
    log_level: Optional[str] = None

    @model_validator(mode="after")
    def _check_ranges(self) -> "RunConfig":
        for name, bounds in (("--r", self.r_range), ("--s", self.s_range)):
            if bounds is not None and (bounds[0] < 0 or bounds[0] > bounds[1]):
                raise ValueError(f"{name}: expected A..B with 0 <= A <= B, got {bounds[0]}..{bounds[1]}")
        return self

    @property
    def has_params(self) -> bool:
        return self.l is not None

    def code_params(self) -> CodeParams:
        missing = [flag for flag, value in (("--q", self.q), ("--l", self.l), ("--lp", self.lp), ("--h", self.h)) if value is None]
        if missing:
            raise UsageError(f"{', '.join(missing)} required")
        return code_params(self.q, self.l, self.lp, self.h)

    def settings(self) -> Settings:
        settings = resolve_settings(self.config)
        overrides = {
            "subspace_budget": self.budget,
            "workers": self.workers,
            "log_level": self.log_level,
            "runlog_dir": self.runlog,
        }
        updates = {k: v for k, v in overrides.items() if v is not None}
        return settings.model_copy(update=updates) if updates else settings


# ------------------------------------------------------------------ parsing


def parse_range(text: str) -> tuple[int, int]:
    """``A..B`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        value = int(text)
        return value, value
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B or an integer, got {text!r}") from None


def _common_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    code = parent.add_argument_group("code parameters")
    code.add_argument("--q", type=int, help="Field size (a prime power)")
    code.add_argument("--l", type=int, help="Rows ℓ of the generic matrix")
    code.add_argument("--lp", type=int, help="Columns ℓ' of the generic matrix")
    code.add_argument("--m", type=int, help="ℓ + ℓ' (alternative to --lp)")
    code.add_argument("--h", type=int, help="Level: largest minor degree")
    run = parent.add_argument_group("run options")
    run.add_argument("--budget", type=int, help="Subspace budget per exhaustive search (env AGW_BUDGET)")
    run.add_argument("--workers", type=int, help="Worker processes for exhaustive searches")
    run.add_argument("--output", type=Path, help="Write the result here instead of stdout")
    run.add_argument("--format", choices=("json", "csv", "text"), default="json", help="Output format")
    run.add_argument("--config", type=Path, help="YAML/JSON settings file")
    run.add_argument("--runlog", type=Path, help="Directory for the JSONL run log")
    run.add_argument("--log-level", help="loguru level for stderr diagnostics")
    return parent


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="affgrass", description="Affine Grassmann codes and their higher weights")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("params", parents=[common], help="Print the code constants")
    commands.add_parser("build", parents=[common], help="Serialize the generator matrix")

    weights = commands.add_parser("weights", help="Higher weights")
    actions = weights.add_subparsers(dest="action", required=True)
    exact = actions.add_parser("exact", parents=[common], help="Exact d_r by exhaustive search")
    exact.add_argument("--r", type=parse_range, help="r-range A..B (default 1..k)")
    exact.add_argument("--code", type=Path, help="Load the code from a build artifact")
    formula = actions.add_parser("formula", parents=[common], help="Every formula-known d_r")
    formula.add_argument("--r", type=parse_range, help="Restrict to this r-range")
    dual = actions.add_parser("dual", parents=[common], help="Weights of the dual code")
    dual.add_argument("--s", type=parse_range, help="s-range A..B")
    dual.add_argument("--mode", choices=("formula", "recursive", "transform"), default="formula")
    dual.add_argument("--side", choices=("initial", "terminal"), default="initial")
    dual.add_argument("--convention", choices=("corollary", "literal"), default="corollary",
                      help="Indexing of the terminal dual formula")
    dual.add_argument("--with-exact", action="store_true",
                      help="In transform mode, search the primal code exhaustively where the budget allows")

    verify = commands.add_parser("verify", parents=[common], help="Run an oracle suite")
    verify.add_argument("suite", choices=list(SUITES))
    return parser


def to_run_config(args: argparse.Namespace) -> RunConfig:
    lp = args.lp
    if args.m is not None:
        if args.l is None:
            raise UsageError("--m needs --l")
        if lp is not None and lp != args.m - args.l:
            raise UsageError(f"--lp {lp} disagrees with --m {args.m} and --l {args.l}")
        lp = args.m - args.l
    try:
        return RunConfig(
            command=args.command,
            action=getattr(args, "action", None),
            q=args.q,
            l=args.l,
            lp=lp,
            h=args.h,
            r_range=getattr(args, "r", None),
            s_range=getattr(args, "s", None),
            budget=args.budget,
            workers=args.workers,
            mode=getattr(args, "mode", "formula"),
            side=getattr(args, "side", "initial"),
            convention=getattr(args, "convention", "corollary"),
            with_exact=getattr(args, "with_exact", False),
            code=getattr(args, "code", None),
            output=args.output,
            format=args.format,
            config=args.config,
            runlog=args.runlog,
            log_level=args.log_level,
        )
    except ValidationError as exc:
        first = exc.errors()[0]
        field = ".".join(str(p) for p in first["loc"]) or "arguments"
        raise UsageError(f"{field}: {first['msg']}") from None


# ----------------------------------------------------------------- commands


def cmd_params(config: RunConfig, settings: Settings, runlog: RunLog) -> Report:
    params = config.code_params()
    report = Report(params=params.to_dict())
    for name, value in params.to_dict().items():
        report.add_result("param", None, value, "definition", note=name)
    return report


def cmd_build(config: RunConfig, settings: Settings, runlog: RunLog) -> str:
    code = build_code(config.code_params(), settings.point_budget, settings.chunk_points)
    logger.debug(f"built {code.describe()}")
    return to_record(code).model_dump_json() + "\n"


def _range(bounds: Optional[tuple[int, int]], lo: int, hi: int, flag: str) -> range:
    if bounds is None:
        return range(lo, hi + 1)
    if bounds[0] < lo or bounds[1] > hi:
        raise UsageError(f"{flag} {bounds[0]}..{bounds[1]} outside {lo}..{hi}")
    return range(bounds[0], bounds[1] + 1)


def cmd_weights_exact(config: RunConfig, settings: Settings, runlog: RunLog) -> Report:
    if config.code is not None:
        code = load_code(config.code)
    else:
        code = build_code(config.code_params(), settings.point_budget, settings.chunk_points)
    params = code.params
    report = Report(params=params.to_dict() if params is not None else code.describe())
    for r in _range(config.r_range, 1, code.dimension, "--r"):
        result = search_min_support(code, r, settings.subspace_budget, settings.workers)
        runlog.emit("SEARCH_DONE", {"r": r, "weight": result.weight, "subspaces": result.total})
        report.add_result("primal", r, result.weight, "exhaustive", witness=result.witness.to_dict())
    return report


def cmd_weights_formula(config: RunConfig, settings: Settings, runlog: RunLog) -> Report:
    params = config.code_params()
    hierarchy = formula_hierarchy(params)
    initial = set(initial_domain(params))
    report = Report(params=params.to_dict())
    for r in _range(config.r_range, 0, params.k, "--r"):
        if hierarchy.status[r] != EntryStatus.FORMULA:
            continue
        notes = []
        if r in initial:
            notes.append(f"initial, r in {min(initial)}..{max(initial)}")
        if params.k - r <= params.lp + 1:
            notes.append(f"terminal, k-{params.k - r}")
        report.add_result("primal", r, hierarchy.d[r], "closed-form", note="; ".join(notes))
    return report


def _default_dual_range(config: RunConfig, params: Optional[CodeParams]) -> tuple[int, int]:
    """The whole s-range the chosen method can fill."""
    if params is None:
        return 1, DEFAULT_DUAL_ROWS
    span = params.n - params.k
    if config.side == "initial":
        hi = span if config.mode == "transform" else min(span, q_sequence(params.q, params.lp) - 1)
        return 1, max(hi, 1)
    hi = span - 1 if config.mode == "transform" else min(span - 1, dual_terminal_domain(params).stop - 1)
    return 0, max(hi, 0)


def cmd_weights_dual(config: RunConfig, settings: Settings, runlog: RunLog) -> Report:
    params = config.code_params() if config.has_params else None
    if params is None and config.q is None:
        raise UsageError("--q required")
    s_range = config.s_range or _default_dual_range(config, params)

    primal = None
    if config.mode == "transform" and config.with_exact:
        code = build_code(params, settings.point_budget, settings.chunk_points)
        primal = exact_hierarchy(code, settings.subspace_budget, settings.workers, partial=True)
        runlog.emit("SEARCH_DONE", {"hierarchy": primal.known()})

    dual = dual_weight_report(
        params,
        s_range,
        mode=config.mode,
        side=config.side,
        q=config.q,
        primal=primal,
        convention=config.convention,
    )
    report = Report(params=params.to_dict() if params is not None else {"q": dual.q})
    kind = "dual_initial" if config.side == "initial" else "dual_terminal"
    for entry in dual.entries:
        report.add_result(kind, entry.s, entry.value, entry.method, note=f"d_{entry.index}")
    return report


def cmd_verify(config: RunConfig, settings: Settings, runlog: RunLog, suite: str) -> Report:
    checks = run_suite(suite, SuiteContext(settings))
    report = Report(params={"suite": suite})
    for check in checks:
        runlog.check(check.name, check.expected, check.actual, check.passed)
        report.checks.append(check)
    return report


# --------------------------------------------------------------------- main


def _write_once(text: str, output: Optional[Path], runlog: RunLog, kind: str) -> None:
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    atomic_write_text(output, text)
    runlog.artifact(output, kind)


def execute(config: RunConfig, settings: Settings, runlog: RunLog, suite: Optional[str] = None) -> int:
    if config.command == "build":
        text = cmd_build(config, settings, runlog)
        _write_once(text, config.output, runlog, "code")
        return EXIT_OK

    if config.command == "params":
        report = cmd_params(config, settings, runlog)
    elif config.command == "verify":
        report = cmd_verify(config, settings, runlog, suite)
    elif config.action == "exact":
        report = cmd_weights_exact(config, settings, runlog)
    elif config.action == "formula":
        report = cmd_weights_formula(config, settings, runlog)
    else:
        report = cmd_weights_dual(config, settings, runlog)

    if config.command == "verify" and suite == "table1" and config.format == "csv":
        text = table_csv(table1())
    else:
        text = render(report, config.format)
    _write_once(text, config.output, runlog, "report")
    if not report.ok:
        logger.warning(f"{len(report.failed)} of {len(report.checks)} checks failed")
        return EXIT_FAILED
    return EXIT_OK


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        config = to_run_config(args)
        settings = config.settings()
    except (UsageError, ValueError, FileNotFoundError) as exc:
        print(f"affgrass: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    configure_logging(settings.log_level)
    runlog = RunLog.open(settings.runlog_dir)
    runlog.emit("RUN_START", {"argv": list(argv) if argv is not None else sys.argv[1:], "command": config.command})
    code = EXIT_USAGE
    try:
        code = execute(config, settings, runlog, getattr(args, "suite", None))
    except (UsageError, AffGrassError) as exc:
        runlog.error(config.command, exc)
        print(f"affgrass: error: {exc}", file=sys.stderr)
    finally:
        status = {EXIT_OK: "success", EXIT_FAILED: "failed"}.get(code, "error")
        runlog.emit("RUN_END", {"status": status, "exit_code": code})
        runlog.close()
    return code


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
