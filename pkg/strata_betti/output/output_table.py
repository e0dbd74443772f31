# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum

import jsonschema

from strata_betti.issue import ISSUES_SCHEMA, Issue


class OutputFormat(Enum):
    """Formats a table can be rendered in."""

    TEXT = "text"
    CSV = "csv"
    JSON = "json"

    @classmethod
    def names(cls) -> list[str]:
        return [member.value for member in cls]


@dataclass
class OutputRow:
    """One degree of a table, with the value of every engine that produced it."""

    degree: int
    dim: int
    engines: dict[str, int] = field(default_factory=dict)
    note: str | None = None

    def serialize(self) -> dict:
        data: dict = {"degree": self.degree, "dim": self.dim}
        if self.engines:
            data["engines"] = dict(self.engines)
        return data


@dataclass
class OutputTable:
    """A Betti table (or comparison table) as printed by the command line.

    JSON and CSV carry the same rows; the text rendering adds the per-row notes, the free
    form ``notes`` and the discrepancies.
    """

    title: str
    rows: list[OutputRow] = field(default_factory=list)
    d: int | None = None
    m: int | None = None
    j: int | None = None
    notes: list[str] = field(default_factory=list)
    discrepancies: list[Issue] = field(default_factory=list)

    @property
    def engine_names(self) -> list[str]:
        names: list[str] = []
        for row in self.rows:
            names.extend(name for name in row.engines if name not in names)
        return names

    @property
    def dims(self) -> list[int]:
        return [row.dim for row in self.rows]

    def serialize(self) -> dict:
        data: dict = {"title": self.title}
        for key in ("d", "m", "j"):
            if getattr(self, key) is not None:
                data[key] = getattr(self, key)
        data["rows"] = [row.serialize() for row in self.rows]
        if self.notes:
            data["notes"] = list(self.notes)
        data["discrepancies"] = [issue.serialize() for issue in self.discrepancies]
        return data

    def to_json(self) -> str:
        """Render as JSON.

        Raises
        ------
        jsonschema.ValidationError
            If the serialized table does not adhere to OUTPUT_TABLE_SCHEMA.
        """
        data = self.serialize()
        jsonschema.validate(data, OUTPUT_TABLE_SCHEMA)
        return json.dumps(data, indent=2)

    def to_csv(self) -> str:
        engines = self.engine_names
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["degree", "dim", *engines])
        for row in self.rows:
            writer.writerow(
                [row.degree, row.dim, *(row.engines.get(name, "") for name in engines)]
            )
        return buffer.getvalue()

    def to_text(self) -> str:
        lines = [self.title]
        parameters = [
            f"{key} = {getattr(self, key)}"
            for key in ("m", "d", "j")
            if getattr(self, key) is not None
        ]
        if parameters:
            lines.append(", ".join(parameters))

        engines = self.engine_names
        header = ["degree", "dim", *engines]
        body = [
            [str(row.degree), str(row.dim), *(str(row.engines.get(name, "")) for name in engines)]
            for row in self.rows
        ]
        widths = [max(len(cell) for cell in column) for column in zip(header, *body, strict=True)]
        lines.append(_join(header, widths).rstrip())
        for row, cells in zip(self.rows, body, strict=True):
            line = _join(cells, widths)
            if row.note:
                line += f"  # {row.note}"
            lines.append(line)

        lines.extend(self.notes)
        lines.extend(f"! {issue}" for issue in self.discrepancies)
        return "\n".join(lines) + "\n"

    def render(self, output_format: OutputFormat | str = OutputFormat.TEXT) -> str:
        output_format = OutputFormat(output_format)
        if output_format is OutputFormat.JSON:
            return self.to_json() + "\n"
        if output_format is OutputFormat.CSV:
            return self.to_csv()
        return self.to_text()


def render_tables(tables: list[OutputTable], output_format: OutputFormat | str) -> str:
    """Render several tables; JSON output is a single array when there is more than one."""
    output_format = OutputFormat(output_format)
    if output_format is OutputFormat.JSON and len(tables) > 1:
        data = [table.serialize() for table in tables]
        for entry in data:
            jsonschema.validate(entry, OUTPUT_TABLE_SCHEMA)
        return json.dumps(data, indent=2) + "\n"
    return "\n".join(table.render(output_format) for table in tables)


def _join(cells: list[str], widths: list[int]) -> str:
    return "  ".join(cell.rjust(width) for cell, width in zip(cells, widths, strict=True))


OUTPUT_TABLE_SCHEMA = {
    "type": "object",
    "definitions": {
        "issue": ISSUES_SCHEMA["definitions"]["issue"],  # type: ignore[index]
    },
    "properties": {
        "title": {"type": "string"},
        "d": {"type": "integer", "minimum": 1},
        "m": {"type": "integer", "minimum": 1},
        "j": {"type": "integer", "minimum": 0},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "degree": {"type": "integer", "minimum": 0},
                    "dim": {"type": "integer", "minimum": 0},
                    "engines": {
                        "type": "object",
                        "additionalProperties": {"type": "integer"},
                    },
                },
                "required": ["degree", "dim"],
                "additionalProperties": False,
            },
        },
        "notes": {"type": "array", "items": {"type": "string"}},
        "discrepancies": {"type": "array", "items": {"$ref": "#/definitions/issue"}},
    },
    "required": ["title", "rows", "discrepancies"],
    "additionalProperties": False,
}
