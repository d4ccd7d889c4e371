import json

import pytest

from hodgekit.cli import EXIT_OK, EXIT_USAGE, main


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    for name in ("HODGEKIT_SYM_BUDGET", "HODGEKIT_WORKERS", "HODGEKIT_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_cubic_threefold(capsys):
    code, report = run_json(capsys, "ci", "--dim", "3", "--degrees", "3", "--jacobian")
    assert code == EXIT_OK
    result = report["results"][0]
    assert result["status"] == "ok"
    assert result["result"]["dim_J"] == 5
    assert result["result"]["euler"] == -6
    assert result["result"]["family"]["label"] == "cubic-threefold"
    assert report["request"]["mode"] == "inline"
    assert report["elapsed_ms"] is None


def test_fano_profile(capsys):
    code, report = run_json(capsys, "fano", "--n", "5", "--d", "2", "--r", "1")
    body = report["results"][0]["result"]
    assert code == EXIT_OK
    assert body["delta"] == 6
    assert body["verdict"] == "NONEMPTY"


def test_fano_count(capsys):
    _, report = run_json(capsys, "fano", "--n", "2", "--d", "2", "--r", "1", "--class")
    assert report["results"][0]["result"]["count"] == 56


def test_published_mismatches_are_warnings(capsys):
    code, report = run_json(capsys, "cover", "--n", "5", "--b", "4", "--compare-paper")
    assert code == EXIT_OK
    assert report["results"][0]["result"]["middle_betti"] == 182
    mismatches = {w["quantity"]: (w["engine"], w["published"]) for w in report["warnings"]}
    assert mismatches == {"middle_betti": (182, 284), "jacobian_dimension": (91, 142), "level": (3, 1)}
    assert all(w["index"] == 0 for w in report["warnings"])


def test_no_warnings_without_comparison(capsys):
    _, report = run_json(capsys, "cover", "--n", "5", "--b", "4")
    assert report["warnings"] == []


def test_weighted_hypersurface(capsys):
    _, report = run_json(capsys, "wps", "--weights", "1", "1", "1", "1", "1", "--degree", "5")
    body = report["results"][0]["result"]
    assert body["middle_row"] == [1, 101, 101, 1]
    assert body["calabi_yau"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ["ci", "--dim", "3"],
        ["cover", "--n", "five", "--b", "4"],
        [],
        ["--format", "xml", "check"],
    ],
)
def test_usage_errors(capsys, argv):
    assert main(argv) == EXIT_USAGE


def test_invalid_parameters_are_errors(capsys):
    code, report = run_json(capsys, "cover", "--n", "3", "--b", "5")
    assert code == 1
    assert report["results"][0]["status"] == "error"


def test_bad_environment(capsys, monkeypatch):
    monkeypatch.setenv("HODGEKIT_WORKERS", "zero")
    assert main(["ci", "--dim", "3", "--degrees", "3"]) == EXIT_USAGE


def test_output_is_deterministic(capsys):
    _, first = run(capsys, "ci", "--dim", "5", "--degrees", "2", "2", "2", "--diamond")
    _, second = run(capsys, "ci", "--dim", "5", "--degrees", "2", "2", "2", "--diamond")
    assert first == second


def test_batch(capsys, tmp_path):
    path = tmp_path / "requests.jsonl"
    path.write_text(
        "\n".join([
            json.dumps({"command": "ci", "params": {"dim": 3, "degrees": [2, 3], "jacobian": True}}),
            "garbage",
            json.dumps({"command": "cover", "params": {"n": 3, "b": 4}}),
        ]) + "\n",
        encoding="utf-8",
    )
    code, report = run_json(capsys, "--batch", str(path))
    assert code == EXIT_OK
    assert [r["command"] for r in report["results"]] == ["ci", "cover"]
    assert report["results"][0]["result"]["dim_J"] == 20
    assert report["results"][1]["result"]["dim_J"] == 10
    assert report["warnings"][0]["kind"] == "batch"
    assert report["warnings"][0]["line"] == 2
    assert report["request"]["mode"] == "batch"


def test_strict_batch_aborts(capsys, tmp_path):
    path = tmp_path / "requests.jsonl"
    path.write_text("garbage\n", encoding="utf-8")
    assert main(["--batch", str(path), "--strict"]) == EXIT_USAGE


def test_batch_and_inline_are_exclusive(capsys, tmp_path):
    path = tmp_path / "requests.jsonl"
    path.write_text("", encoding="utf-8")
    assert main(["--batch", str(path), "check"]) == EXIT_USAGE


def test_table_format_and_out_file(capsys, tmp_path):
    out = tmp_path / "report.txt"
    code = main(["ci", "--dim", "3", "--degrees", "3", "--diamond", "--format", "table", "--out", str(out)])
    assert code == EXIT_OK
    assert capsys.readouterr().out == ""
    text = out.read_text(encoding="utf-8")
    assert text.startswith("hodgekit ")
    assert "[ok]" in text
    assert "cubic-threefold" in text


def test_timing(capsys):
    _, report = run_json(capsys, "ci", "--dim", "2", "--degrees", "3", "--timing")
    assert report["elapsed_ms"] is not None


def test_default_check_suite_is_deterministic(capsys):
    code, first = run(capsys, "check")
    assert code == EXIT_OK
    _, second = run(capsys, "check")
    assert first == second
    assert json.loads(first)["results"][0]["result"]["passed"] is True


def test_log_lines_go_to_stderr(capfd):
    code = main(["ci", "--dim", "3", "--degrees", "3", "--log-level", "INFO"])
    captured = capfd.readouterr()
    assert code == EXIT_OK
    assert "[request=0 ci] started" in captured.err
    assert "[request=0 ci] finished with status ok" in captured.err
    assert "[request=0" not in captured.out
    assert json.loads(captured.out)["results"][0]["status"] == "ok"


def test_log_level_can_be_lowered_again(capfd):
    main(["ci", "--dim", "3", "--degrees", "3", "--log-level", "INFO"])
    capfd.readouterr()
    main(["ci", "--dim", "3", "--degrees", "3"])
    assert "[request=0 ci]" not in capfd.readouterr().err
