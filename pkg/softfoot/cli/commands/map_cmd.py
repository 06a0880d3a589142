"""Compliance map command - compliance over a geometric (ē, e₀) grid."""

from __future__ import annotations

from pathlib import Path

import numpy as np

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
from softfoot.harness.export import MAP_HEADER
from softfoot.harness.maps import compliance_map


def compliance_map_cmd(
    config: Path | None = CONFIG_OPTION,
    out: Path = OUT_OPTION,
    units: Units | None = UNITS_OPTION,
    seed: int | None = SEED_OPTION,
    overrides: list[str] | None = SET_OPTION,
) -> None:
    """Compliance to compression on the configured stiffness grid and loads."""
    ctx = context_from_options(config, out, units, seed, overrides)
    grid = ctx.config.map
    e_bars = np.geomspace(grid.e_bar_min, grid.e_bar_max, grid.points)
    e0s = np.geomspace(grid.e0_min, grid.e0_max, grid.points)

    ctx.console.header(
        f"compliance map {grid.points}×{grid.points}, loads {list(grid.loads_kg)} kg "
        f"({grid.method}, {grid.derivative})"
    )
    result = compliance_map(
        ctx.config.params,
        e_bars,
        e0s,
        grid.loads_kg,
        method=grid.method,
        derivative=grid.derivative,
        options=ctx.config.solver,
        workers=grid.workers,
    )
    for diagnostic in result.diagnostics:
        ctx.console.warning(diagnostic)

    trend = "holds" if result.non_increasing_in_e_bar() else "violated"
    ctx.console.print(f"|compliance| non-increasing in e_bar: {trend}")
    write_table(ctx, "compliance_map.csv", MAP_HEADER, list(result.rows()))
    finish(ctx, len(result.diagnostics), "grid cell")
