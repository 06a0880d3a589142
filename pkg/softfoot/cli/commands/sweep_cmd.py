"""Tilt sweep command - support length and ankle compensation per foot and terrain."""

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
    exit_with_code,
    finish,
    write_table,
)
from softfoot.core.config import RunConfig, SweepConfig
from softfoot.core.errors import ErrorCode
from softfoot.core.result import Err, Ok
from softfoot.harness.export import Cell, export_table, export_zmp
from softfoot.harness.support import SupportSummary, max_compensation, support_length
from softfoot.harness.sweep import (
    CompliantFoot,
    Foot,
    FootModel,
    RigidFoot,
    SoftFoot,
    SweepSpec,
    SweepTable,
    sweep_margin,
    tilt_sweep,
)
from softfoot.harness.terrain import catalog_terrain
from softfoot.output.errors import (
    export_error_exit_code,
    print_export_error,
    print_harness_error,
)

SUMMARY_HEADER = (
    "foot",
    "terrain",
    "support_length_m",
    "support_start_m",
    "support_stop_m",
    "branch",
    "refined",
    "compensation_min_rad",
    "compensation_max_rad",
    "max_abs_compensation_rad",
    "admissible_rows",
    "failed_rows",
)


def foot_and_spec(model: FootModel, config: RunConfig) -> tuple[Foot, SweepSpec]:
    """Foot model and sweep grid for one row of the experiment.

    Raises:
        ValueError: when the configured ranges do not fit the model.
    """
    sweep: SweepConfig = config.sweep
    load = config.load.force
    match model:
        case "rigid":
            foot: Foot = RigidFoot(sweep.sole_length)
            start, stop = 0.0, sweep.sole_length
        case "compliant":
            foot = CompliantFoot(sweep.compliant_stiffness, sweep.sole_length, sweep.leg_height)
            start, stop = 0.0, sweep.sole_length
        case "softfoot":
            foot = SoftFoot(config.params, config.solver)
            start, stop = sweep.load_arm_start, sweep.load_arm_stop
    spec = SweepSpec(
        foot_model=model,
        start=start,
        stop=stop,
        step=sweep.step,
        ankle_limit=sweep.ankle_limit,
        load=load,
        workers=sweep.workers,
    )
    return foot, spec


def summary_row(table: SweepTable, support: SupportSummary) -> tuple[Cell, ...]:
    primary = support.primary
    admissible = sum(1 for row in table.rows if row.admissible)
    return (
        table.foot_model,
        table.terrain,
        support.length,
        None if primary is None else primary.start,
        None if primary is None else primary.stop,
        None if primary is None else primary.branch,
        False if primary is None else primary.refined,
        None if primary is None else primary.compensation_min,
        None if primary is None else primary.compensation_max,
        max_compensation(table),
        admissible,
        len(table.failures),
    )


def tilt_sweep_cmd(
    config: Path | None = CONFIG_OPTION,
    out: Path = OUT_OPTION,
    units: Units | None = UNITS_OPTION,
    seed: int | None = SEED_OPTION,
    overrides: list[str] | None = SET_OPTION,
) -> None:
    """Sweep the COM (flat feet) or the ankle load arm (SoftFoot) over every terrain."""
    ctx = context_from_options(config, out, units, seed, overrides)
    sweep = ctx.config.sweep

    summary: list[tuple[Cell, ...]] = []
    failures = 0
    for model in sweep.feet:
        try:
            foot, spec = foot_and_spec(model, ctx.config)
        except ValueError as e:
            ctx.console.error(f"{model} sweep: {e}")
            exit_with_code(int(ErrorCode.USER_ERROR))
        for name in sweep.terrains:
            terrain = catalog_terrain(name, sweep.sole_length, sweep.tip)
            table = tilt_sweep(foot, spec, terrain)
            evaluate = sweep_margin(foot, spec, terrain) if sweep.refine else None
            support = support_length(table, evaluate)

            for row in table.failures:
                ctx.console.warning(f"{model}/{name} at {row.swept_value!r} m: {row.diagnostic}")
            failures += len(table.failures)
            if support.diagnostic is not None:
                print_harness_error(support.diagnostic, ctx.console, f"{model}/{name}")
            ctx.console.print(
                f"{model:>9} {name:<12} support {support.length * 1e3:8.2f} mm  "
                f"max |comp| {max_compensation(table):.4f} rad"
            )

            for written in (
                export_table(table, ctx.output(f"tilt_sweep_{model}_{name}.csv")),
                export_zmp(table, ctx.output(f"zmp_{model}_{name}.csv")),
            ):
                match written:
                    case Ok(value=path):
                        ctx.console.debug(f"wrote {path}")
                    case Err(error=error):
                        print_export_error(error, ctx.console)
                        exit_with_code(export_error_exit_code(error))
            summary.append(summary_row(table, support))

    write_table(ctx, "support_summary.csv", SUMMARY_HEADER, summary)
    finish(ctx, failures, "sweep point")

