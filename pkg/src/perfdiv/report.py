"""Line-delimited JSON reports: one record per graph, then a summary line."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, TextIO

from .campaigns import CampaignReport


def _dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def write_report(report: CampaignReport, out: TextIO) -> None:
    for rec in report.records:
        out.write(_dump(rec) + "\n")
    out.write(_dump({"summary": report.summary()}) + "\n")


def emit_report(report: CampaignReport, path: str | Path) -> None:
    """Write ``report`` to ``path``; identical reports give identical bytes."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        write_report(report, fh)


def read_report(path: str | Path) -> tuple[list[dict], dict]:
    """``(records, summary)`` from a report file."""
    records, summary = [], None
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            obj = json.loads(line)
            if "summary" in obj:
                summary = obj["summary"]
            else:
                records.append(obj)
    if summary is None:
        raise ValueError(f"{path}: report has no summary line")
    return records, summary


def format_lines(records: Iterable[dict]) -> str:
    return "".join(_dump(r) + "\n" for r in records)
