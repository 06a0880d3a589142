"""Shared helpers for CLI commands."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from enum import Enum
from pathlib import Path
from typing import NoReturn

import numpy as np
import typer

from softfoot.cli.context import CLIContext, build_context
from softfoot.core.errors import ErrorCode
from softfoot.core.result import Err, Ok
from softfoot.harness.export import Cell, write_rows
from softfoot.output.errors import export_error_exit_code, print_export_error


class Units(str, Enum):
    mm = "mm"
    m = "m"


CONFIG_OPTION = typer.Option(
    None, "--config", help="Run config (.toml or .json)", show_default=False
)
OUT_OPTION = typer.Option(Path("out"), "--out", help="Output directory")
UNITS_OPTION = typer.Option(
    None, "--units", help="Length units when the config declares none", show_default=False
)
SEED_OPTION = typer.Option(None, "--seed", help="Seed for randomized checks", show_default=False)
SET_OPTION = typer.Option(
    None, "--set", help="Override a config key (section.key=value, repeatable)", show_default=False
)


def context_from_options(
    config: Path | None,
    out: Path,
    units: Units | None,
    seed: int | None,
    overrides: list[str] | None,
) -> CLIContext:
    return build_context(config, out, None if units is None else units.value, seed, overrides)


def exit_with_code(code: int) -> NoReturn:
    """Exit with given code. Explicit helper for clarity."""
    raise typer.Exit(code=code)


def write_table(
    ctx: CLIContext,
    name: str,
    header: Sequence[str],
    rows: Iterable[Sequence[Cell | np.floating]],
) -> Path:
    """Write one CSV into the output directory; an I/O failure ends the command."""
    match write_rows(ctx.output(name), header, rows):
        case Ok(value=path):
            ctx.console.success(f"wrote {path}")
            return path
        case Err(error=error):
            print_export_error(error, ctx.console)
            exit_with_code(export_error_exit_code(error))


def finish(ctx: CLIContext, failures: int, what: str = "solve") -> None:
    """Exit with SOLVER_ERROR when any solve failed; outputs already written stay."""
    if failures:
        ctx.console.error(f"{failures} {what}(s) failed; partial outputs kept in {ctx.out_dir}")
        exit_with_code(int(ErrorCode.SOLVER_ERROR))
