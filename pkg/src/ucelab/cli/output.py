"""Table emitters for center classes: markdown, CSV and JSON.

Coefficients are always exact strings such as ``"a/2 - a^3/2"`` or
``"-3/2"``; a JSON document parses back to the identical classes.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

from ..center import CenterClass, basis_labels
from .parser import parse_param

FORMATS = ("markdown", "csv", "json")
DOCUMENT_KIND = "ucelab.center-table"


@dataclass
class OutputDocument:
    """Rows of center classes keyed by arbitrary labelled fields."""

    n: int
    key_fields: list[str]
    rows: list[tuple[dict[str, Any], CenterClass]] = field(default_factory=list)
    title: str = ""
    var: str = "a"

    def add(self, key: dict[str, Any], value: CenterClass) -> None:
        self.rows.append((key, value))

    @property
    def basis(self) -> list[str]:
        return basis_labels(self.n)

    def _cells(self, value: CenterClass) -> list[str]:
        return [c.to_str(self.var) for c in value.coords()]

    def to_markdown(self) -> str:
        header = self.key_fields + self.basis
        lines = []
        if self.title:
            lines += [f"### {self.title}", ""]
        lines.append("| " + " | ".join(header) + " |")
        lines.append("|" + "|".join("---" for _ in header) + "|")
        for key, value in self.rows:
            cells = [str(key[k]) for k in self.key_fields] + self._cells(value)
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.key_fields + self.basis)
        for key, value in self.rows:
            w.writerow([key[k] for k in self.key_fields] + self._cells(value))
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "kind": DOCUMENT_KIND,
            "title": self.title,
            "degree": self.n,
            "parameter": self.var,
            "basis": self.basis,
            "key_fields": self.key_fields,
            "rows": [
                {"key": key, "coeffs": dict(zip(self.basis, self._cells(value)))}
                for key, value in self.rows
            ],
        }
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "markdown":
            return self.to_markdown()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f"unknown format {fmt!r}")


def load_document(text: str) -> OutputDocument:
    """Inverse of :meth:`OutputDocument.to_json`."""
    raw = json.loads(text)
    if raw.get("kind") != DOCUMENT_KIND:
        raise ValueError("not a center-table document")
    n = raw["degree"]
    var = raw.get("parameter", "a")
    doc = OutputDocument(n, list(raw["key_fields"]), title=raw.get("title", ""), var=var)
    for row in raw["rows"]:
        coords = [parse_param(row["coeffs"][b], var) for b in doc.basis]
        doc.add(row["key"], CenterClass.from_coords(coords))
    return doc
