from __future__ import annotations

import typer

from softfoot import __version__
from softfoot.cli.commands.equilibrium_cmd import equilibrium
from softfoot.cli.commands.gallery_cmd import gallery
from softfoot.cli.commands.linearize_cmd import linearize
from softfoot.cli.commands.map_cmd import compliance_map_cmd
from softfoot.cli.commands.planar_cmd import planar_compare
from softfoot.cli.commands.sweep_cmd import tilt_sweep_cmd

app = typer.Typer(
    add_completion=False,
    no_args_is_help=True,
    rich_markup_mode="rich",
)


# Commands
app.command()(equilibrium)
app.command()(linearize)
app.command("compliance-map")(compliance_map_cmd)
app.command("tilt-sweep")(tilt_sweep_cmd)
app.command("planar-compare")(planar_compare)
app.command()(gallery)


def _show_version(value: bool) -> None:
    if value:
        typer.echo(__version__)
        raise typer.Exit(code=0)


@app.callback()
def _main(  # pyright: ignore[reportUnusedFunction]
    version: bool = typer.Option(
        False, "--version", help="Show version and exit.", callback=_show_version, is_eager=True
    ),
) -> None:
    """Numerical statics lab for an adaptive articulated robot foot."""
    del version


def main() -> None:
    app()
