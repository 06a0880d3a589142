"""Gallery command - foot shapes over an ascending load sequence."""

from __future__ import annotations

from pathlib import Path

from softfoot.cli.commands._helpers import (
    CONFIG_OPTION,
    OUT_OPTION,
    SEED_OPTION,
    SET_OPTION,
    UNITS_OPTION,
    Units,
    context_from_options,
    finish,
    write_table,
)
from softfoot.harness.export import Cell
from softfoot.harness.maps import Gallery, configuration_gallery
from softfoot.output.errors import print_statics_error

SHAPE_HEADER = ("load_kg", "part", "index", "x_m", "y_m")
SUMMARY_HEADER = (
    "load_kg",
    "compression_m",
    "compression_fraction",
    "exact_fraction",
    "arch_height_m",
    "endpoint_drop_m",
    "iterations",
    "converged",
)


def shape_rows(gallery: Gallery) -> list[tuple[Cell, ...]]:
    rows: list[tuple[Cell, ...]] = []
    for entry in gallery.entries:
        if entry.shape is None:
            continue
        for part, points in (("sole", entry.shape.sole), ("arch", entry.shape.arch)):
            rows += [
                (entry.load_kg, part, i, float(x), float(y)) for i, (x, y) in enumerate(points)
            ]
    return rows


def summary_rows(gallery: Gallery) -> list[tuple[Cell, ...]]:
    return [
        (
            entry.load_kg,
            entry.compression,
            entry.compression_fraction,
            entry.exact_fraction,
            entry.arch_height,
            entry.endpoint_drop,
            None if entry.state is None else entry.state.iterations,
            entry.error is None,
        )
        for entry in gallery.entries
    ]


def gallery(
    config: Path | None = CONFIG_OPTION,
    out: Path = OUT_OPTION,
    units: Units | None = UNITS_OPTION,
    seed: int | None = SEED_OPTION,
    overrides: list[str] | None = SET_OPTION,
) -> None:
    """Solve the configured load sequence, warm-starting each load from the last."""
    ctx = context_from_options(config, out, units, seed, overrides)
    loads = ctx.config.gallery_loads_kg
    result = configuration_gallery(ctx.config.params, loads, ctx.config.solver)

    ctx.console.header(f"gallery, compression width {result.width * 1e3:.3f} mm")
    for entry in result.entries:
        if entry.error is not None:
            print_statics_error(entry.error, ctx.console, f"{entry.load_kg:g} kg")
            continue
        ctx.console.print(
            f"{entry.load_kg:6.1f} kg  compression {entry.compression * 1e3:7.3f} mm "
            f"(closed form {entry.compression_fraction:.3f}, exact {entry.exact_fraction:.3f})  "
            f"arch height {entry.arch_height * 1e3:7.3f} mm"
        )
    if not result.compression_monotone or not result.arch_height_non_increasing:
        ctx.console.warning("compression or arch height is not monotone over the load sequence")

    write_table(ctx, "gallery.csv", SHAPE_HEADER, shape_rows(result))
    write_table(ctx, "gallery_summary.csv", SUMMARY_HEADER, summary_rows(result))
    finish(ctx, len(result.failures))
