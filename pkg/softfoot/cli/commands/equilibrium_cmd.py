"""Equilibrium command - solve the foot under the configured load and dump its shape."""

from __future__ import annotations

from pathlib import Path

import typer

from softfoot.cli.commands._helpers import (
    CONFIG_OPTION,
    OUT_OPTION,
    SEED_OPTION,
    SET_OPTION,
    UNITS_OPTION,
    Units,
    context_from_options,
    exit_with_code,
    write_table,
)
from softfoot.core.result import Err, Ok
from softfoot.harness.cop import cop_from_forces
from softfoot.harness.export import Cell
from softfoot.output.errors import print_statics_error, statics_error_exit_code
from softfoot.statics.compression import nonlinear_compression
from softfoot.statics.equilibrium import solve_equilibrium
from softfoot.statics.params import EquilibriumState, SoftFootParams
from softfoot.statics.shape import FootShape, foot_shape

STATE_HEADER = ("quantity", "value")
SHAPE_HEADER = ("part", "index", "x_m", "y_m")


def state_rows(
    params: SoftFootParams, state: EquilibriumState, load: float
) -> list[tuple[Cell, Cell]]:
    rows: list[tuple[Cell, Cell]] = [(f"q{i}_rad", float(v)) for i, v in enumerate(state.q)]
    positions = (0.0, params.mid_contact, params.tip_contact(state.q))
    cop = cop_from_forces(state.forces, positions)
    rows += [
        ("F1_N", state.f1),
        ("F2_N", state.f2),
        ("F3_N", state.f3),
        ("T_N", state.tension),
        ("load_N", load),
        ("load_arm_m", params.load_arm),
        ("cop_m", cop.value if isinstance(cop, Ok) else None),
        ("compression_m", nonlinear_compression(params, state.q)),
        ("residual_norm", state.residual_norm),
        ("iterations", state.iterations),
    ]
    return rows


def shape_rows(shape: FootShape) -> list[tuple[Cell, Cell, Cell, Cell]]:
    rows: list[tuple[Cell, Cell, Cell, Cell]] = []
    for part, points in (("sole", shape.sole), ("arch", shape.arch)):
        rows += [(part, i, float(x), float(y)) for i, (x, y) in enumerate(points)]
    return rows


def equilibrium(
    config: Path | None = CONFIG_OPTION,
    out: Path = OUT_OPTION,
    units: Units | None = UNITS_OPTION,
    seed: int | None = SEED_OPTION,
    overrides: list[str] | None = SET_OPTION,
) -> None:
    """Solve the nonlinear equilibrium and write the state and foot shape."""
    ctx = context_from_options(config, out, units, seed, overrides)
    params = ctx.config.params
    load = ctx.config.load

    solved = solve_equilibrium(params, load, None, ctx.config.solver)
    if isinstance(solved, Err):
        print_statics_error(solved.error, ctx.console, "equilibrium")
        if solved.error.best is not None:
            ctx.console.debug(f"best residual {solved.error.best.residual_norm:.3e}")
        exit_with_code(statics_error_exit_code(solved.error))
    state = solved.value

    ctx.console.header(f"equilibrium at {load.force:.6g} N, x_H = {params.load_arm:.6g} m")
    ctx.console.print(f"q [rad]: {', '.join(f'{v:.6g}' for v in state.q)}")
    ctx.console.print(
        f"F1 = {state.f1:.6g} N, F2 = {state.f2:.6g} N, F3 = {state.f3:.6g} N, "
        f"T = {state.tension:.6g} N"
    )
    ctx.console.debug(f"{state.iterations} iterations, residual {state.residual_norm:.3e}")

    write_table(ctx, "equilibrium_state.csv", STATE_HEADER, state_rows(params, state, load.force))
    write_table(ctx, "foot_shape.csv", SHAPE_HEADER, shape_rows(foot_shape(params, state.q)))
