"""
Centralized logging setup for hodgekit.

All modules get a logger via:
    from ..utils.log import get_logger
    log = get_logger(__name__)

Everything goes to stderr: stdout is reserved for the JSON or table report,
so piping `hodgekit ... | jq` keeps working with logging turned up.

Log levels used:
    DEBUG   — series orders, intermediate diamonds, cache hits
    INFO    — one line per request (command, params, status)
    WARNING — recoverable problems (claim mismatches, skipped batch lines)
    ERROR   — consistency failures with the offending report
"""

import logging
import sys
from typing import Optional

_handler: Optional[logging.StreamHandler] = None


def setup_logging(level: int = logging.WARNING) -> None:
    """
    Call once at startup (in cli.py) to configure the package logger.
    Repeated calls adjust the level and replace the handler with one bound
    to the current sys.stderr.
    """
    global _handler
    root = logging.getLogger("hodgekit")
    root.setLevel(level)
    if _handler is not None:
        root.removeHandler(_handler)

    fmt = logging.Formatter(
        fmt="%(asctime)s  %(levelname)-8s  %(name)-30s  %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )
    _handler = logging.StreamHandler(sys.stderr)
    _handler.setFormatter(fmt)
    root.addHandler(_handler)

    # sympy is quiet by default; keep it that way if something turns it up
    logging.getLogger("sympy").setLevel(logging.WARNING)


def parse_level(name: str) -> int:
    """'debug' / 'INFO' / '20' -> logging level; ValueError on anything else."""
    text = str(name).strip()
    if text.isdigit():
        return int(text)
    level = logging.getLevelName(text.upper())
    if not isinstance(level, int):
        raise ValueError(f"unknown log level {name!r}")
    return level


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger namespaced under 'hodgekit', e.g. 'hodgekit.core.covers'.
    """
    if not name.startswith("hodgekit"):
        name = f"hodgekit.{name}"
    return logging.getLogger(name)
