"""CSV and JSON rendering of result tables.

Exact values are written as rational strings ("2/3", "-4"), floats with
``repr`` so that identical inputs give byte-identical output.
"""
from __future__ import annotations

import csv
import io
import json
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exceptions import DomainError

__all__ = ["FORMATS", "Report", "render", "render_cell"]

FORMATS = ("csv", "json")


@dataclass(slots=True)
class Report:
    columns: tuple[str, ...]
    rows: list[tuple] = field(default_factory=list)

    def add(self, *values) -> None:
        if len(values) != len(self.columns):
            raise DomainError(f"Expected {len(self.columns)} values. Got {len(values)}.")
        self.rows.append(values)

    def records(self) -> list[dict[str, Any]]:
        return [
            {column: _json_cell(value) for column, value in zip(self.columns, row)}
            for row in self.rows
        ]


def render_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _json_cell(value):
    if isinstance(value, Fraction):
        return str(value)
    return value


@contextmanager
def unlimited_int_digits():
    """Lifts the int-to-str digit limit and restores it on exit."""
    previous = sys.get_int_max_str_digits()
    sys.set_int_max_str_digits(0)
    try:
        yield
    finally:
        sys.set_int_max_str_digits(previous)


def render(report: Report, fmt: str = "csv") -> str:
    # exact partial sums carry numerators far beyond the default limit
    with unlimited_int_digits():
        return _render(report, fmt)


def _render(report: Report, fmt: str) -> str:
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(report.columns)
        writer.writerows([render_cell(value) for value in row] for row in report.rows)
        return buffer.getvalue()
    if fmt == "json":
        return json.dumps(report.records(), indent=2) + "\n"
    raise DomainError(f"Unknown format {fmt!r}. Expected one of {', '.join(FORMATS)}.")
