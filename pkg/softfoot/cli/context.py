from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import typer

from softfoot.core.config import RunConfig, parse_config
from softfoot.core.result import Err
from softfoot.core.units import LengthUnit
from softfoot.output.console import ConsoleProtocol, RichConsole
from softfoot.output.errors import config_error_exit_code, print_config_error


@dataclass(frozen=True, slots=True)
class CLIContext:
    config: RunConfig
    console: ConsoleProtocol
    out_dir: Path

    def output(self, name: str) -> Path:
        return self.out_dir / name


def build_context(
    config_path: Path | None,
    out_dir: Path,
    units: LengthUnit | None,
    seed: int | None,
    overrides: list[str] | None,
    console: ConsoleProtocol | None = None,
) -> CLIContext:
    """Load the run config and exit with USER_ERROR when it is invalid."""
    console = console or RichConsole()
    result = parse_config(config_path, units=units, overrides=overrides or (), seed=seed)
    if isinstance(result, Err):
        print_config_error(result.error, console)
        raise typer.Exit(code=config_error_exit_code(result.error))

    config = result.value
    for entry in config.provenance:
        console.debug(f"{entry.key} = {entry.value} ({entry.source})")
    return CLIContext(config=config, console=console, out_dir=out_dir)
