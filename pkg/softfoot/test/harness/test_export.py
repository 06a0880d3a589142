"""Tests for softfoot.harness.export module."""

import math
from pathlib import Path

import numpy as np
import pytest

from softfoot.core.result import Err, Ok
from softfoot.harness.export import (
    MAP_HEADER,
    SWEEP_HEADER,
    ZMP_HEADER,
    export_table,
    export_zmp,
    format_cell,
    read_table,
    render_rows,
    write_rows,
)
from softfoot.harness.maps import compliance_map
from softfoot.harness.sweep import RigidFoot, SoftFoot, SweepSpec, SweepTable, tilt_sweep
from softfoot.harness.terrain import DEFAULT_SOLE_LENGTH, catalog_terrain
from softfoot.statics.nominal import nominal_load, nominal_params


def _rigid_table(step: float = 0.1) -> SweepTable:
    spec = SweepSpec(
        foot_model="rigid",
        start=0.0,
        stop=0.2,
        step=step,
        ankle_limit=0.349,
        load=nominal_load().force,
    )
    return tilt_sweep(RigidFoot(DEFAULT_SOLE_LENGTH), spec, catalog_terrain("step"))


def _softfoot_table(workers: int) -> SweepTable:
    spec = SweepSpec(
        foot_model="softfoot",
        start=0.03,
        stop=0.1,
        step=0.01,
        ankle_limit=0.349,
        load=nominal_load().force,
        workers=workers,
    )
    return tilt_sweep(SoftFoot(nominal_params()), spec, catalog_terrain("mid-bump"))


class TestFormatCell:
    """Tests for format_cell and render_rows."""

    @pytest.mark.parametrize(
        ("value", "text"),
        [
            (True, "true"),
            (False, "false"),
            (None, "nan"),
            (3, "3"),
            (0.1, "0.1"),
            (1e-20, "1e-20"),
            (float("nan"), "nan"),
            (float("-inf"), "-inf"),
            ("flat", "flat"),
        ],
    )
    def test_cells(self, value: float | int | bool | str | None, text: str) -> None:
        assert format_cell(value) == text

    def test_numpy_scalars_render_as_floats(self) -> None:
        text = render_rows(("a", "b"), [(np.float64(0.25), np.float32(0.5))])
        assert text == "a,b\n0.25,0.5\n"

    def test_ragged_row(self) -> None:
        with pytest.raises(ValueError, match="1 cells for 2 columns"):
            render_rows(("a", "b"), [(1.0,)])


class TestExportTable:
    """Tests for export_table and read_table."""

    def test_empty_table_is_header_only(self, tmp_path: Path) -> None:
        table = _rigid_table()
        empty = SweepTable(foot_model="rigid", terrain="step", spec=table.spec, rows=())
        result = export_table(empty, tmp_path / "empty.csv")
        assert isinstance(result, Ok)
        assert result.value.read_bytes() == (",".join(SWEEP_HEADER) + "\n").encode()

    def test_three_rows_four_lines(self, tmp_path: Path) -> None:
        table = _rigid_table()
        assert len(table.rows) == 3
        path = tmp_path / "sweep.csv"
        assert isinstance(export_table(table, path), Ok)
        data = path.read_bytes()
        assert b"\r" not in data
        lines = data.decode("utf-8").split("\n")
        assert lines[-1] == ""
        assert len(lines[:-1]) == 4
        assert all(len(line.split(",")) == len(SWEEP_HEADER) for line in lines[:-1])

    def test_sweep_round_trip(self, tmp_path: Path) -> None:
        table = _rigid_table(step=0.01)
        path = tmp_path / "nested" / "sweep.csv"
        assert isinstance(export_table(table, path), Ok)
        result = read_table(path)
        assert isinstance(result, Ok)
        read = result.value
        assert read.header == SWEEP_HEADER
        assert read.floats("cop_m") == tuple(row.cop for row in table.rows)
        assert read.floats("F2_N") == tuple(row.f2 for row in table.rows)
        assert read.booleans("admissible") == tuple(row.admissible for row in table.rows)
        assert all(math.isnan(t) for t in read.floats("T_N"))

    def test_zmp_companion_table(self, tmp_path: Path) -> None:
        table = _rigid_table(step=0.01)
        path = tmp_path / "zmp.csv"
        assert isinstance(export_zmp(table, path), Ok)
        result = read_table(path)
        assert isinstance(result, Ok)
        read = result.value
        assert read.header == ZMP_HEADER
        assert read.floats("zmp_m") == tuple(row.zmp for row in table.rows)
        assert read.floats("zmp_margin_m") == tuple(row.zmp_margin for row in table.rows)
        assert read.booleans("inside_hull") == tuple(row.zmp_inside for row in table.rows)

    def test_map_round_trip(self, tmp_path: Path) -> None:
        grid = [0.5, 1.0, 2.0]
        result = compliance_map(nominal_params(), grid, grid[:2], (0.0, 1.5))
        path = tmp_path / "map.csv"
        assert isinstance(export_table(result, path), Ok)
        read = read_table(path)
        assert isinstance(read, Ok)
        assert read.value.header == MAP_HEADER
        assert len(read.value.rows) == 12
        assert read.value.floats("compliance_m_per_N") == tuple(r[3] for r in result.rows())

    def test_byte_identical_exports(self, tmp_path: Path) -> None:
        first = tmp_path / "first.csv"
        second = tmp_path / "second.csv"
        assert isinstance(export_table(_softfoot_table(workers=1), first), Ok)
        assert isinstance(export_table(_softfoot_table(workers=3), second), Ok)
        assert first.read_bytes() == second.read_bytes()

    def test_unknown_column(self, tmp_path: Path) -> None:
        path = tmp_path / "t.csv"
        assert isinstance(write_rows(path, ("a",), [(1.0,)]), Ok)
        result = read_table(path)
        assert isinstance(result, Ok)
        with pytest.raises(KeyError):
            result.value.floats("b")


class TestExportErrors:
    """I/O and format failures carry the path."""

    def test_unwritable_path(self, tmp_path: Path) -> None:
        blocker = tmp_path / "file"
        blocker.write_text("x", encoding="utf-8")
        target = blocker / "table.csv"
        result = write_rows(target, ("a",), [(1.0,)])
        assert isinstance(result, Err)
        assert result.error.kind == "write_failed"
        assert result.error.path == str(target)

    def test_ragged_rows(self, tmp_path: Path) -> None:
        result = write_rows(tmp_path / "t.csv", ("a", "b"), [(1.0,)])
        assert isinstance(result, Err)
        assert result.error.kind == "bad_table"
        assert not (tmp_path / "t.csv").exists()

    def test_missing_file(self, tmp_path: Path) -> None:
        result = read_table(tmp_path / "missing.csv")
        assert isinstance(result, Err)
        assert result.error.kind == "read_failed"

    @pytest.mark.parametrize("text", ["", "a,b\n1.0\n"])
    def test_malformed_file(self, tmp_path: Path, text: str) -> None:
        path = tmp_path / "bad.csv"
        path.write_text(text, encoding="utf-8")
        result = read_table(path)
        assert isinstance(result, Err)
        assert result.error.kind == "bad_table"
