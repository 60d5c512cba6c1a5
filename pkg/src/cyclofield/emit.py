"""Render lists of flat records as JSON, a markdown table, or CSV."""

from __future__ import annotations

import csv
import io
import json
from typing import Sequence

FORMATS = ("json", "md", "csv")

# markdown shows the class number under its usual name
MD_HEADERS = {"class_number": "h", "l_polynomial": "L(u)"}


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value, ensure_ascii=False, separators=(",", ":"))
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def emit(records: Sequence[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(list(records), indent=2, ensure_ascii=False) + "\n"
    if not records:
        return ""
    keys = list(records[0])
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(keys)
        for r in records:
            writer.writerow([_cell(r[k]) for k in keys])
        return buf.getvalue()
    if fmt == "md":
        head = [MD_HEADERS.get(k, k) for k in keys]
        lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(keys)]
        for r in records:
            lines.append("| " + " | ".join(_cell(r[k]).replace("|", "\\|") for k in keys) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
