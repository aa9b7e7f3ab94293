"""
Byte-stable CSV/JSON rendering of tables, verification verdicts and scans.

Every cell is a string before it reaches an encoder: exact integers in
decimal, floats at 17 significant digits. Both encodings therefore carry
identical text for identical inputs.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

__all__ = ["ReportDocument", "fmt"]

KINDS = ("table", "verification", "scan")


def fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return format(value, ".17g")
    if value is None:
        return ""
    return str(value)


@dataclass
class ReportDocument:
    kind: str
    columns: tuple[str, ...]
    rows: list[dict] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)
    summary: dict | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")

    def add(self, **row) -> None:
        missing = set(self.columns) - set(row)
        if missing:
            raise KeyError(f"row lacks columns {sorted(missing)}")
        self.rows.append({c: fmt(row[c]) for c in self.columns})

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([row[c] for c in self.columns])
        # comment lines are reserved for scan summaries
        if self.kind == "scan" and self.summary:
            for key, value in self.summary.items():
                buf.write(f"# {key}={fmt(value)}\n")
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "kind": self.kind,
            "metadata": {k: fmt(v) for k, v in self.metadata.items()},
            "rows": self.rows,
        }
        if self.summary is not None:
            doc["summary"] = {k: fmt(v) for k, v in self.summary.items()}
        return json.dumps(doc, indent=2) + "\n"

    def render(self, fmt_name: str) -> str:
        return self.to_json() if fmt_name == "json" else self.to_csv()
