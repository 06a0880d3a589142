"""CSV export and re-import of sweep tables, compliance maps and ad-hoc rows.

Format: UTF-8, LF line endings, header first, floats as `repr` (shortest
round-trip decimal), booleans `true`/`false`, missing values `nan`.
"""

from __future__ import annotations

import csv
import io
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from softfoot.core.result import Err, Ok, Result
from softfoot.harness.errors import ExportError
from softfoot.harness.maps import ComplianceMap
from softfoot.harness.sweep import SweepTable

__all__ = [
    "Cell",
    "SWEEP_HEADER",
    "MAP_HEADER",
    "ZMP_HEADER",
    "CsvTable",
    "format_cell",
    "render_rows",
    "write_rows",
    "export_table",
    "export_zmp",
    "read_table",
]

Cell = float | int | bool | str | None

SWEEP_HEADER = (
    "swept_value_m",
    "cop_m",
    "ankle_comp_rad",
    "F1_N",
    "F2_N",
    "F3_N",
    "T_N",
    "admissible",
)
MAP_HEADER = ("e_bar", "e0", "load_kg", "compliance_m_per_N")
ZMP_HEADER = ("swept_value_m", "zmp_m", "zmp_margin_m", "inside_hull")


def format_cell(value: Cell) -> str:
    match value:
        case None:
            return "nan"
        case bool():
            return "true" if value else "false"
        case int():
            return str(value)
        case float():
            return repr(float(value))
        case str():
            return value


def render_rows(header: Sequence[str], rows: Iterable[Sequence[Cell | np.floating]]) -> str:
    """CSV text of `header` then `rows`; numpy scalars are rendered as Python floats."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        if len(row) != len(header):
            raise ValueError(f"row has {len(row)} cells for {len(header)} columns")
        writer.writerow(
            format_cell(float(cell) if isinstance(cell, np.floating) else cell) for cell in row
        )
    return buffer.getvalue()


def write_rows(
    path: Path, header: Sequence[str], rows: Iterable[Sequence[Cell | np.floating]]
) -> Result[Path, ExportError]:
    try:
        text = render_rows(header, rows)
    except ValueError as e:
        return Err(ExportError(kind="bad_table", message=str(e), path=str(path)))
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as e:
        return Err(
            ExportError(
                kind="write_failed",
                message=f"failed to write table: {e}",
                path=str(path),
                hint="check that the output directory is writable",
            )
        )
    return Ok(path)


def _sweep_rows(table: SweepTable) -> list[tuple[Cell, ...]]:
    return [
        (
            row.swept_value,
            row.cop,
            row.ankle_compensation,
            row.f1,
            row.f2,
            row.f3,
            row.tension,
            row.admissible,
        )
        for row in table.rows
    ]


def export_table(table: SweepTable | ComplianceMap, path: Path) -> Result[Path, ExportError]:
    """Write a sweep table or a compliance map in its fixed column layout."""
    match table:
        case SweepTable():
            return write_rows(path, SWEEP_HEADER, _sweep_rows(table))
        case ComplianceMap():
            return write_rows(path, MAP_HEADER, list(table.rows()))


def export_zmp(table: SweepTable, path: Path) -> Result[Path, ExportError]:
    """Write the ZMP of every sweep row and its clearance inside the contact hull."""
    rows = [(row.swept_value, row.zmp, row.zmp_margin, row.zmp_inside) for row in table.rows]
    return write_rows(path, ZMP_HEADER, rows)


@dataclass(frozen=True, slots=True)
class CsvTable:
    header: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    def column(self, name: str) -> tuple[str, ...]:
        """Raw cells of one column.

        Raises:
            KeyError: for an unknown column.
        """
        if name not in self.header:
            raise KeyError(name)
        index = self.header.index(name)
        return tuple(row[index] for row in self.rows)

    def floats(self, name: str) -> tuple[float, ...]:
        return tuple(float(cell) for cell in self.column(name))

    def booleans(self, name: str) -> tuple[bool, ...]:
        return tuple(cell == "true" for cell in self.column(name))


def read_table(path: Path) -> Result[CsvTable, ExportError]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        return Err(
            ExportError(kind="read_failed", message=f"failed to read table: {e}", path=str(path))
        )
    records = list(csv.reader(io.StringIO(text)))
    if not records:
        return Err(ExportError(kind="bad_table", message="table has no header", path=str(path)))
    header = tuple(records[0])
    for number, record in enumerate(records[1:], start=2):
        if len(record) != len(header):
            return Err(
                ExportError(
                    kind="bad_table",
                    message=f"line {number}: {len(record)} cells for {len(header)} columns",
                    path=str(path),
                )
            )
    return Ok(CsvTable(header=header, rows=tuple(tuple(record) for record in records[1:])))
