"""
Request / Result / Report — the data contracts between the CLI, the batch
reader, the runner and the renderers. Inline flags and batch lines both end up
as a Request; every executed Request produces one Result.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from ..utils.log import get_logger

log = get_logger(__name__)

SCHEMA_VERSION = 1

# command -> parameter -> (kind, default); a default of REQUIRED means "must be given"
REQUIRED = object()

PARAM_SCHEMA: dict[str, dict[str, tuple[str, Any]]] = {
    "ci": {
        "dim": ("int", REQUIRED),
        "degrees": ("int_list", REQUIRED),
        "jacobian": ("bool", False),
        "diamond": ("bool", False),
        "betti": ("bool", False),
        "chern": ("bool", False),
    },
    "cover": {
        "n": ("int", REQUIRED),
        "b": ("int", REQUIRED),
        "m": ("int", 2),
        "diamond": ("bool", False),
    },
    "wps": {
        "weights": ("int_list", REQUIRED),
        "degree": ("int", REQUIRED),
        "diamond": ("bool", False),
    },
    "fano": {
        "n": ("int", REQUIRED),
        "d": ("int", REQUIRED),
        "r": ("int", REQUIRED),
        "m": ("int", 2),
        "show_class": ("bool", False),
    },
    "classify": {
        "max_dim": ("int", REQUIRED),
        "max_degree_sum": ("int", REQUIRED),
    },
    "check": {
        "suite": ("str", "default"),
    },
}

COMMANDS = tuple(PARAM_SCHEMA)


def _coerce(command: str, name: str, kind: str, value):
    where = f"{command}.{name}"
    if kind == "int":
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError(f"{where} must be an integer, got {value!r}")
        return value
    if kind == "int_list":
        if not isinstance(value, (list, tuple)) or any(
            isinstance(v, bool) or not isinstance(v, int) for v in value
        ):
            raise ValueError(f"{where} must be a list of integers, got {value!r}")
        return [int(v) for v in value]
    if kind == "bool":
        if not isinstance(value, bool):
            raise ValueError(f"{where} must be true or false, got {value!r}")
        return value
    if kind == "str":
        if not isinstance(value, str):
            raise ValueError(f"{where} must be a string, got {value!r}")
        return value
    raise AssertionError(f"unknown parameter kind {kind}")


def normalize_params(command: str, params: dict) -> dict:
    """Validate against PARAM_SCHEMA and fill defaults; ValueError on anything off."""
    if command not in PARAM_SCHEMA:
        raise ValueError(f"unknown command {command!r}, expected one of {', '.join(COMMANDS)}")
    if not isinstance(params, dict):
        raise ValueError(f"params for {command} must be an object, got {type(params).__name__}")
    schema = PARAM_SCHEMA[command]
    unknown = sorted(set(params) - set(schema))
    if unknown:
        raise ValueError(f"unknown parameter(s) for {command}: {', '.join(unknown)}")
    out = {}
    for name, (kind, default) in schema.items():
        if name in params and params[name] is not None:
            out[name] = _coerce(command, name, kind, params[name])
        elif default is REQUIRED:
            raise ValueError(f"{command} needs parameter {name!r}")
        else:
            out[name] = default
    return out


@dataclass(frozen=True)
class Request:
    command: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "params", normalize_params(self.command, self.params))

    def to_dict(self) -> dict:
        return {"command": self.command, "params": dict(self.params)}

    @classmethod
    def from_dict(cls, d: dict) -> "Request":
        if not isinstance(d, dict):
            raise ValueError(f"request must be a JSON object, got {type(d).__name__}")
        extra = sorted(set(d) - {"command", "params"})
        if extra:
            raise ValueError(f"unexpected key(s) in request: {', '.join(extra)}")
        if "command" not in d:
            raise ValueError("request has no 'command'")
        return cls(command=d["command"], params=d.get("params", {}))


# ------------------------------------------------------------------
# Batch input
# ------------------------------------------------------------------

@dataclass(frozen=True)
class BatchDiagnostic:
    line: int
    message: str

    def to_dict(self) -> dict:
        return {"kind": "batch", "line": self.line, "message": self.message}


class BatchAbort(ValueError):
    """Raised in strict mode on the first malformed batch line."""

    def __init__(self, diagnostic: BatchDiagnostic):
        super().__init__(f"line {diagnostic.line}: {diagnostic.message}")
        self.diagnostic = diagnostic


def ingest_batch(path, strict: bool = False) -> tuple[list[Request], list[BatchDiagnostic]]:
    """
    Read newline-delimited JSON requests in order. Blank lines are ignored.
    Malformed lines are skipped with a diagnostic, or abort the batch when
    `strict` is set.
    """
    requests: list[Request] = []
    diagnostics: list[BatchDiagnostic] = []
    text = Path(path).read_text(encoding="utf-8")
    for number, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        try:
            requests.append(Request.from_dict(json.loads(raw)))
        except (ValueError, TypeError) as e:
            # json.JSONDecodeError is a ValueError
            diagnostic = BatchDiagnostic(number, str(e))
            if strict:
                raise BatchAbort(diagnostic) from e
            log.warning(f"[batch {path}] skipping line {number}: {e}")
            diagnostics.append(diagnostic)
    log.info(f"[batch {path}] {len(requests)} request(s), {len(diagnostics)} skipped")
    return requests, diagnostics


# ------------------------------------------------------------------
# Results
# ------------------------------------------------------------------

STATUS_OK = "ok"
STATUS_ERROR = "error"
STATUS_INCONSISTENT = "inconsistent"
STATUS_FAILED = "failed"


@dataclass
class CommandContext:
    """Settings handed to every command handler."""
    compare_published: bool = False
    sym_budget: int = 70


@dataclass
class CommandOutcome:
    result: dict
    warnings: list[dict] = field(default_factory=list)
    failed: bool = False


@dataclass
class Result:
    index: int
    command: str
    params: dict
    status: str
    result: Optional[dict]
    warnings: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "command": self.command,
            "params": self.params,
            "status": self.status,
            "result": self.result,
        }


@dataclass
class Report:
    version: str
    request: dict
    results: list[Result]
    warnings: list[dict]
    elapsed_ms: Optional[float] = None
    schema: int = SCHEMA_VERSION

    @property
    def exit_code(self) -> int:
        statuses = {r.status for r in self.results}
        if statuses & {STATUS_INCONSISTENT, STATUS_FAILED}:
            return 2
        if STATUS_ERROR in statuses:
            return 1
        return 0

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "schema": self.schema,
            "request": self.request,
            "results": [r.to_dict() for r in self.results],
            "warnings": self.warnings,
            "elapsed_ms": self.elapsed_ms,
        }
