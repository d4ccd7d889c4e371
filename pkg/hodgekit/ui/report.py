"""
Report rendering.

JSON is the stable format (schema in docs/report-schema.md): keys sorted,
two-space indent, trailing newline, so two runs of the same request compare
byte for byte. The table format is for people and may change at any time.
"""

import json

from ..core.hodge import HodgeDiamond
from ..core.request import Report, Result
from ..utils.formatting import format_level
from .diamond import render_diamond


def render_json(report: Report) -> str:
    return json.dumps(report.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _scalar_lines(body: dict, skip: set[str]) -> list[str]:
    lines = []
    for key in sorted(body):
        if key in skip:
            continue
        value = body[key]
        if key == "level":
            value = format_level(value)
        elif isinstance(value, dict):
            value = ", ".join(f"{k}={v}" for k, v in sorted(value.items()))
        elif isinstance(value, list) and len(value) > 12:
            value = f"[{len(value)} entries]"
        lines.append(f"  {key:<18} {value}")
    return lines


def _render_result(result: Result) -> list[str]:
    params = " ".join(f"{k}={v}" for k, v in sorted(result.params.items()) if v not in (False, None))
    lines = [f"#{result.index} {result.command} {params}  [{result.status}]"]
    body = result.result or {}

    if result.command == "classify" and "entries" in body:
        lines.append(f"  {body['count']} level-one varieties")
        for entry in body["entries"]:
            v = entry["variety"]
            family = entry["family"]["label"] if entry["family"] else "??"
            degrees = ",".join(map(str, v["degrees"]))
            lines.append(f"    dim {v['dim']:<3} ({degrees:<7}) dim J = {entry['jacobian_dimension']:<4} {family}")
        return lines

    if result.command == "check" and "checks" in body:
        for check in body["checks"]:
            mark = "ok  " if check["passed"] else "FAIL"
            lines.append(f"  {mark} {check['name']}")
            if not check["passed"]:
                lines.append(f"       {check['detail'].get('error')}")
        return lines

    lines += _scalar_lines(body, skip={"diamond", "entries"})
    if "diamond" in body:
        d = body["diamond"]
        picture = render_diamond(HodgeDiamond(d["dim"], tuple(tuple(row) for row in d["h"])))
        lines += ["", *("    " + row for row in picture.splitlines())]
    return lines


def render_table(report: Report) -> str:
    lines = [f"hodgekit {report.version}"]
    for result in report.results:
        lines.append("")
        lines += _render_result(result)
    if report.warnings:
        lines += ["", "warnings:"]
        for w in report.warnings:
            text = w.get("message") or (
                f"{w.get('quantity')}: computed {w.get('engine')}, published {w.get('published')}"
                f" ({w.get('citation')})"
            )
            where = f"#{w['index']} " if "index" in w else ""
            lines.append(f"  {where}[{w.get('kind')}] {text}")
    if report.elapsed_ms is not None:
        lines += ["", f"elapsed: {report.elapsed_ms:.1f} ms"]
    return "\n".join(lines) + "\n"


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return render_json(report)
    if fmt == "table":
        return render_table(report)
    raise ValueError(f"unknown format {fmt!r}")
