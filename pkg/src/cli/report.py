"""
Report assembly and rendering.

JSON output is key-sorted with fixed separators so identical runs give
identical bytes. Text output is a pandas table of check statuses followed
by the details of each check, matrices printed as grids.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import pandas as pd

from src.cli.config import RunOptions
from src.cli.suites import CheckResult

FORMATS = ("json", "text")


@dataclass(frozen=True)
class Report:
    instance: str
    options: RunOptions
    checks: tuple[CheckResult, ...]

    @property
    def status(self) -> str:
        return "pass" if all(c.passed for c in self.checks) else "fail"

    def to_dict(self, timing: bool = False) -> dict:
        checks = []
        for check in self.checks:
            entry = {
                "name": check.name,
                "status": check.status,
                "details": check.details,
            }
            if not check.passed:
                entry["message"] = check.message
                entry["witness"] = check.witness
            if timing:
                entry["seconds"] = round(check.seconds, 3)
            checks.append(entry)
        return {
            "instance": self.instance,
            "seed": self.options.seed,
            "options": self.options.to_dict(),
            "status": self.status,
            "checks": checks,
        }


def _is_matrix(value) -> bool:
    return (
        isinstance(value, list)
        and bool(value)
        and all(isinstance(row, list) and row for row in value)
        and all(
            isinstance(x, int) and not isinstance(x, bool) for row in value for x in row
        )
        and len({len(row) for row in value}) == 1
    )


def _text_lines(payload: dict, indent: str = "") -> list[str]:
    lines = []
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict) and value:
            lines.append(f"{indent}{key}:")
            lines.extend(_text_lines(value, indent + "  "))
        elif _is_matrix(value):
            lines.append(f"{indent}{key}:")
            grid = pd.DataFrame(value).to_string(index=False, header=False)
            lines.extend(f"{indent}  {row}" for row in grid.splitlines())
        else:
            text = json.dumps(value, sort_keys=True, ensure_ascii=False)
            lines.append(f"{indent}{key}: {text}")
    return lines


def render(payload: dict, fmt: str = "json") -> bytes:
    """
    Render any report-like dict.

    Raises:
        ValueError: For an unknown format
    """
    if fmt == "json":
        text = json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)
    elif fmt == "text":
        text = "\n".join(_text_lines(payload))
    else:
        raise ValueError(f"Unknown format {fmt!r}; choose from {FORMATS}")
    return (text + "\n").encode("utf-8")


def emit_report(report: Report, fmt: str = "json", timing: bool = False) -> bytes:
    """
    Serialize a report.

    Args:
        report (Report): Results of one run
        fmt (str): "json" or "text"
        timing (bool): Include per-check wall time; off by default so that
            output is byte-stable

    Returns:
        bytes: UTF-8 encoded report
    """
    payload = report.to_dict(timing)
    if fmt != "text":
        return render(payload, fmt)

    lines = [
        f"instance: {report.instance}",
        f"seed: {report.options.seed}",
        f"status: {report.status}",
    ]
    if report.checks:
        columns = ["check", "status", "message"] + (["seconds"] if timing else [])
        rows = [
            [c.name, c.status, c.message] + ([round(c.seconds, 3)] if timing else [])
            for c in report.checks
        ]
        lines.append(pd.DataFrame(rows, columns=columns).to_string(index=False))
    else:
        lines.append("no checks run")
    for entry in payload["checks"]:
        lines.append("")
        lines.append(f"[{entry['name']}]")
        details = {k: v for k, v in entry.items() if k not in ("name", "status")}
        lines.extend(_text_lines(details, "  "))
    return ("\n".join(lines) + "\n").encode("utf-8")
