"""Rendering of result tables as markdown, CSV or JSON records.

Records are a JSON list of objects keyed by column name.  Integral values
are JSON integers, other rationals are ``"p/q"`` strings and Chow classes
are their ``to_record`` dict, so a records document can be read back
losslessly with :func:`parse_records`.
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Sequence

from .chow import CHOW_SLOTS, ChowClass, format_fraction

FORMATS = ("md", "csv", "records")


@dataclass
class Table:
    title: str
    columns: Sequence[str]
    rows: List[Sequence[Any]]
    # overrides the column-wise records when the rows have their own schema
    records: Optional[List[dict]] = None


def _text(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (int, Fraction)):
        return format_fraction(value)
    if isinstance(value, tuple):
        return "(" + ",".join(_text(v) for v in value) + ")"
    return str(value)


def _record_value(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction)):
        return int(value) if value.denominator == 1 else format_fraction(value)
    if isinstance(value, ChowClass):
        return value.to_record()
    if isinstance(value, (tuple, list)):
        return [_record_value(v) for v in value]
    return str(value)


def to_markdown(table: Table) -> str:
    lines = []
    if table.title:
        lines += [f"### {table.title}", ""]
    lines.append("| " + " | ".join(table.columns) + " |")
    lines.append("|" + "|".join("---" for _ in table.columns) + "|")
    for row in table.rows:
        lines.append("| " + " | ".join(_text(v) for v in row) + " |")
    return "\n".join(lines) + "\n"


def to_csv(table: Table) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_text(v) for v in row])
    return buf.getvalue()


def to_records(table: Table) -> str:
    if table.records is not None:
        return json.dumps(table.records, indent=2, ensure_ascii=False) + "\n"
    records = [
        {col: _record_value(v) for col, v in zip(table.columns, row)} for row in table.rows
    ]
    return json.dumps(records, indent=2, ensure_ascii=False) + "\n"


def render(table: Table, fmt: str) -> str:
    if fmt == "md":
        return to_markdown(table)
    if fmt == "csv":
        return to_csv(table)
    if fmt == "records":
        return to_records(table)
    raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")


_RATIONAL = re.compile(r"-?\d+/\d+")


def parse_records(text: str) -> list:
    """Load a records document: ``"p/q"`` strings become Fractions, Chow dicts ChowClass."""
    def value(v):
        if isinstance(v, str) and _RATIONAL.fullmatch(v):
            return Fraction(v)
        if isinstance(v, list):
            return [value(x) for x in v]
        return v

    def hook(obj):
        if len(obj) == 6 and set(obj) == set(CHOW_SLOTS):
            return ChowClass.from_record(obj)
        return {k: value(v) for k, v in obj.items()}

    return json.loads(text, object_hook=hook)
