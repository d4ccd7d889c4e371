"""
cli.py — argument parsing, configuration, wiring, and entry point.

This is the only place that reads environment variables and constructs the
Runner. Everything else receives its settings via constructor arguments or
the CommandContext.

Exit codes:
    0  everything ran and every route agreed
    1  usage error: bad flags, invalid parameters, strict batch abort
    2  two computation routes disagreed, or a check suite failed
"""

import argparse
import logging
import os
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from dotenv import load_dotenv

from . import __version__
from .commands import HANDLERS
from .core.request import (
    BatchAbort,
    CommandContext,
    Report,
    Request,
    ingest_batch,
)
from .core.runner import Runner
from .core.schubert import DEFAULT_SYM_BUDGET
from .ui.report import render
from .utils.log import get_logger, parse_level, setup_logging

log = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCONSISTENT = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad flags; hodgekit reserves 2 for route disagreement."""

    def error(self, message):
        raise UsageError(message)


# ------------------------------------------------------------------
# Parser
# ------------------------------------------------------------------

def _global_options() -> argparse.ArgumentParser:
    # SUPPRESS defaults let the options appear before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default=argparse.SUPPRESS)
    common.add_argument("--batch", metavar="FILE", default=argparse.SUPPRESS,
                        help="newline-delimited JSON requests")
    common.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS)
    common.add_argument("--strict", action="store_true", default=argparse.SUPPRESS,
                        help="abort on the first malformed batch line")
    common.add_argument("--compare-paper", dest="compare_paper", action="store_true",
                        default=argparse.SUPPRESS,
                        help="compare results with published values and warn on mismatch")
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--log-level", dest="log_level", default=argparse.SUPPRESS)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _global_options()
    parser = _Parser(prog="hodgekit", parents=[common],
                     description="Exact Hodge-theoretic invariants and Fano-scheme calculus.")
    parser.add_argument("--version", action="version", version=f"hodgekit {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    ci = sub.add_parser("ci", parents=[common], help="smooth complete intersection")
    ci.add_argument("--dim", type=int, required=True)
    ci.add_argument("--degrees", type=int, nargs="*", required=True)
    ci.add_argument("--jacobian", action="store_true")
    ci.add_argument("--diamond", action="store_true")
    ci.add_argument("--betti", action="store_true")
    ci.add_argument("--chern", action="store_true")

    cover = sub.add_parser("cover", parents=[common], help="cyclic cover of P^n")
    cover.add_argument("--n", type=int, required=True)
    cover.add_argument("--b", type=int, required=True)
    cover.add_argument("--m", type=int, default=2)
    cover.add_argument("--diamond", action="store_true")

    wps = sub.add_parser("wps", parents=[common], help="weighted projective hypersurface")
    wps.add_argument("--weights", type=int, nargs="+", required=True)
    wps.add_argument("--degree", type=int, required=True)
    wps.add_argument("--diamond", action="store_true")

    fano = sub.add_parser("fano", parents=[common], help="Fano scheme of r-planes on a cover")
    fano.add_argument("--n", type=int, required=True)
    fano.add_argument("--d", type=int, required=True)
    fano.add_argument("--r", type=int, required=True)
    fano.add_argument("--m", type=int, default=2)
    fano.add_argument("--class", dest="show_class", action="store_true")

    classify = sub.add_parser("classify", parents=[common], help="level-one complete intersections")
    classify.add_argument("--max-dim", dest="max_dim", type=int, required=True)
    classify.add_argument("--max-degree-sum", dest="max_degree_sum", type=int, required=True)

    check = sub.add_parser("check", parents=[common], help="run a consistency suite")
    check.add_argument("--suite", default="default")
    return parser


_PARAMS = {
    "ci": ("dim", "degrees", "jacobian", "diamond", "betti", "chern"),
    "cover": ("n", "b", "m", "diamond"),
    "wps": ("weights", "degree", "diamond"),
    "fano": ("n", "d", "r", "m", "show_class"),
    "classify": ("max_dim", "max_degree_sum"),
    "check": ("suite",),
}


def inline_request(args: argparse.Namespace) -> Request:
    return Request(args.command, {name: getattr(args, name) for name in _PARAMS[args.command]})


# ------------------------------------------------------------------
# Configuration
# ------------------------------------------------------------------

def _env_int(name: str, default: int, minimum: int = 1) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise UsageError(f"{name} must be >= {minimum}, got {value}")
    return value


def _log_level(args: argparse.Namespace) -> int:
    name = getattr(args, "log_level", None) or os.getenv("HODGEKIT_LOG_LEVEL") or "WARNING"
    try:
        return parse_level(name)
    except ValueError as e:
        raise UsageError(str(e))


# ------------------------------------------------------------------
# Entry point
# ------------------------------------------------------------------

def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    setup_logging(logging.WARNING)

    try:
        args = build_parser().parse_args(argv)
        setup_logging(_log_level(args))
        budget = _env_int("HODGEKIT_SYM_BUDGET", DEFAULT_SYM_BUDGET)
        workers = _env_int("HODGEKIT_WORKERS", 4)

        batch = getattr(args, "batch", None)
        if batch and args.command:
            raise UsageError("--batch and an inline command are mutually exclusive")
        if not batch and not args.command:
            raise UsageError("give a command or --batch FILE")

        warnings: list[dict] = []
        if batch:
            try:
                requests, diagnostics = ingest_batch(batch, strict=getattr(args, "strict", False))
            except OSError as e:
                raise UsageError(f"cannot read batch file: {e}")
            warnings += [d.to_dict() for d in diagnostics]
        else:
            try:
                requests = [inline_request(args)]
            except ValueError as e:
                raise UsageError(str(e))
    except BatchAbort as e:
        log.error(f"batch aborted: {e}")
        print(f"hodgekit: batch aborted at {e}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as e:
        print(f"hodgekit: {e}", file=sys.stderr)
        return EXIT_USAGE

    fmt = getattr(args, "format", "json")
    timing = getattr(args, "timing", False)
    context = CommandContext(compare_published=getattr(args, "compare_paper", False), sym_budget=budget)
    runner = Runner(HANDLERS, context, workers=workers)

    started = time.perf_counter()
    results = runner.run(requests)
    elapsed = round((time.perf_counter() - started) * 1000, 3) if timing else None

    for r in results:
        warnings += [{"index": r.index, **w} for w in r.warnings]

    echo = {
        "mode": "batch" if batch else "inline",
        "batch": batch,
        "format": fmt,
        "strict": getattr(args, "strict", False),
        "compare_paper": context.compare_published,
    }
    report = Report(__version__, echo, results, warnings, elapsed)
    text = render(report, fmt)

    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(text, encoding="utf-8")
        log.info(f"report written to {out}")
    else:
        sys.stdout.write(text)
    return report.exit_code


def run_cli() -> None:
    sys.exit(main())
