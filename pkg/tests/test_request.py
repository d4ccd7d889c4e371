import json

import pytest

from hodgekit.core.errors import BudgetExceededError, ConsistencyError
from hodgekit.core.request import (
    STATUS_ERROR,
    STATUS_FAILED,
    STATUS_INCONSISTENT,
    STATUS_OK,
    BatchAbort,
    CommandContext,
    CommandOutcome,
    Report,
    Request,
    Result,
    ingest_batch,
    normalize_params,
)
from hodgekit.core.runner import Runner


def test_defaults_are_filled():
    assert normalize_params("cover", {"n": 5, "b": 4}) == {"n": 5, "b": 4, "m": 2, "diamond": False}
    assert normalize_params("check", {}) == {"suite": "default"}


@pytest.mark.parametrize(
    "command, params",
    [
        ("ci", {"dim": 3}),
        ("ci", {"dim": "3", "degrees": [3]}),
        ("ci", {"dim": 3, "degrees": [3, True]}),
        ("cover", {"n": 5, "b": 4, "colour": "red"}),
        ("fano", {"n": 5, "d": 2, "r": 1, "show_class": "yes"}),
        ("plot", {}),
    ],
)
def test_invalid_params(command, params):
    with pytest.raises(ValueError):
        normalize_params(command, params)


def test_request_from_dict():
    r = Request.from_dict({"command": "ci", "params": {"dim": 3, "degrees": [3]}})
    assert r.params["jacobian"] is False
    with pytest.raises(ValueError):
        Request.from_dict({"params": {}})
    with pytest.raises(ValueError):
        Request.from_dict({"command": "check", "extra": 1})
    with pytest.raises(ValueError):
        Request.from_dict([1, 2])


def _write(tmp_path, lines):
    path = tmp_path / "batch.jsonl"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def test_ingest_empty_file(tmp_path):
    assert ingest_batch(_write(tmp_path, [""])) == ([], [])


def test_ingest_skips_bad_lines(tmp_path):
    path = _write(tmp_path, [
        json.dumps({"command": "ci", "params": {"dim": 3, "degrees": [3]}}),
        "",
        "{not json",
        json.dumps({"command": "plot", "params": {}}),
        json.dumps({"command": "check"}),
    ])
    requests, diagnostics = ingest_batch(path)
    assert [r.command for r in requests] == ["ci", "check"]
    assert [d.line for d in diagnostics] == [3, 4]
    assert "unknown command" in diagnostics[1].message


def test_ingest_strict_aborts(tmp_path):
    path = _write(tmp_path, [json.dumps({"command": "check"}), "{not json"])
    with pytest.raises(BatchAbort) as excinfo:
        ingest_batch(path, strict=True)
    assert excinfo.value.diagnostic.line == 2


# ------------------------------------------------------------------
# Runner
# ------------------------------------------------------------------

def _handler(params, ctx):
    return CommandOutcome({"suite": params["suite"]})


def _raising(exc):
    def handler(params, ctx):
        raise exc
    return handler


@pytest.mark.parametrize(
    "handler, status",
    [
        (_handler, STATUS_OK),
        (lambda p, c: CommandOutcome({}, failed=True), STATUS_FAILED),
        (_raising(ValueError("bad")), STATUS_ERROR),
        (_raising(BudgetExceededError("too big")), STATUS_ERROR),
        (_raising(ConsistencyError("split")), STATUS_INCONSISTENT),
        (_raising(RuntimeError("boom")), STATUS_ERROR),
    ],
)
def test_runner_statuses(handler, status):
    runner = Runner({"check": handler}, CommandContext())
    assert runner.run_one(0, Request("check")).status == status


def test_budget_errors_carry_a_warning():
    runner = Runner({"check": _raising(BudgetExceededError("too big"))}, CommandContext())
    result = runner.run_one(0, Request("check"))
    assert result.warnings == [{"kind": "budget", "message": "too big"}]


def test_runner_keeps_input_order():
    requests = [Request("check", {"suite": f"s{i}"}) for i in range(12)]
    results = Runner({"check": _handler}, CommandContext(), workers=4).run(requests)
    assert [r.index for r in results] == list(range(12))
    assert [r.result["suite"] for r in results] == [f"s{i}" for i in range(12)]


def test_runner_without_handler():
    result = Runner({}, CommandContext()).run_one(0, Request("check"))
    assert result.status == STATUS_ERROR


def test_runner_rejects_zero_workers():
    with pytest.raises(ValueError):
        Runner({}, CommandContext(), workers=0)


@pytest.mark.parametrize(
    "statuses, code",
    [([], 0), ([STATUS_OK], 0), ([STATUS_OK, STATUS_ERROR], 1),
     ([STATUS_ERROR, STATUS_INCONSISTENT], 2), ([STATUS_FAILED], 2)],
)
def test_report_exit_code(statuses, code):
    results = [Result(i, "check", {}, s, None) for i, s in enumerate(statuses)]
    assert Report("0", {}, results, []).exit_code == code
