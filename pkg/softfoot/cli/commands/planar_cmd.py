"""Planar compare command - rigid, compliant and adaptive-arch feet per scenario."""

from __future__ import annotations

from itertools import groupby
from pathlib import Path

from softfoot.cli.commands._helpers import (
    CONFIG_OPTION,
    OUT_OPTION,
    SEED_OPTION,
    SET_OPTION,
    UNITS_OPTION,
    Units,
    context_from_options,
    write_table,
)
from softfoot.core.config import PlanarConfig, PlanarScenario
from softfoot.core.result import Err
from softfoot.harness.export import Cell, format_cell
from softfoot.output.console import ConsoleProtocol
from softfoot.output.errors import print_planar_error
from softfoot.planar.adaptive import (
    AdaptiveArchParams,
    adaptive_admissible_com_range,
    adaptive_arch_forces,
)
from softfoot.planar.compliant import (
    CompliantLumpedParams,
    compliant_support_length,
    compliant_tilt_angle,
    k_min_stability,
    k_min_support,
)
from softfoot.planar.rigid import RigidFootScenario, rigid_foot_on_obstacle

HEADER = ("scenario", "model", "branch", "quantity", "value")

Row = tuple[Cell, Cell, Cell, Cell, Cell]


def rigid_rows(
    planar: PlanarConfig, scenario: PlanarScenario, console: ConsoleProtocol
) -> list[Row]:
    rigid = RigidFootScenario(
        sole_length=planar.sole_length,
        leg_height=planar.leg_height,
        obstacle_position=scenario.obstacle_position,
        obstacle_height=scenario.obstacle_height,
        ankle_limit=planar.ankle_limit,
    )
    poses = rigid_foot_on_obstacle(rigid)
    if isinstance(poses, Err):
        print_planar_error(poses.error, console, scenario.name)
        return [(scenario.name, "rigid", "none", "poses", 0)]
    rows: list[Row] = []
    for pose in poses.value:
        for quantity, value in (
            ("tilt_rad", pose.tilt),
            ("com_displacement_m", pose.com_displacement),
            ("compensation_rad", pose.compensation),
            ("support_length_m", pose.support_length),
            ("within_ankle_limit", pose.within_ankle_limit),
        ):
            rows.append((scenario.name, "rigid", pose.branch, quantity, value))
    return rows


def compliant_rows(planar: PlanarConfig, scenario: PlanarScenario) -> list[Row]:
    params = CompliantLumpedParams(
        spring_stiffness=scenario.stiffness,
        sole_length=planar.sole_length,
        load=planar.load,
        mass=planar.mass,
        leg_height=planar.leg_height,
    )
    support_bound = k_min_support(planar.load, planar.sole_length, planar.ankle_limit)
    stability = k_min_stability(params, planar.convention)
    tilt = compliant_tilt_angle(params, scenario.com_offset)
    values: tuple[tuple[str, Cell], ...] = (
        ("stiffness_N_per_m", scenario.stiffness),
        ("k_min_support_N_per_m", support_bound),
        ("k_min_stability_N_per_m", stability.stiffness),
        ("tilt_rad", tilt),
        ("within_ankle_limit", abs(tilt) <= planar.ankle_limit),
        ("support_length_m", compliant_support_length(params, planar.ankle_limit)),
        ("covers_sole", scenario.stiffness >= support_bound),
        ("stable", scenario.stiffness > stability.stiffness),
    )
    return [(scenario.name, "compliant", stability.convention, q, v) for q, v in values]


def adaptive_rows(planar: PlanarConfig, scenario: PlanarScenario) -> list[Row]:
    params = AdaptiveArchParams(
        sole_length=planar.sole_length,
        load=planar.load,
        com_position=scenario.com_position,
        alpha1=scenario.alpha1,
        alpha2=scenario.alpha2,
        alpha_h=scenario.alpha_h,
    )
    forces = adaptive_arch_forces(params)
    com_range = adaptive_admissible_com_range(params)
    values: tuple[tuple[str, Cell], ...] = (
        ("heel_force_N", forces.heel),
        ("obstacle_force_N", forces.obstacle),
        ("tip_force_N", forces.tip),
        ("admissible", forces.admissible),
        ("com_range_lower_m", None if com_range.empty else com_range.lower),
        ("com_range_upper_m", None if com_range.empty else com_range.upper),
        ("stated_lower_bound_m", com_range.stated_lower_bound),
        ("force_lower_bound_m", com_range.force_lower_bound),
    )
    return [(scenario.name, "adaptive", "arch", q, v) for q, v in values]


def planar_compare(
    config: Path | None = CONFIG_OPTION,
    out: Path = OUT_OPTION,
    units: Units | None = UNITS_OPTION,
    seed: int | None = SEED_OPTION,
    overrides: list[str] | None = SET_OPTION,
) -> None:
    """Evaluate the three planar foot models on every configured scenario."""
    ctx = context_from_options(config, out, units, seed, overrides)
    planar = ctx.config.planar

    rows: list[Row] = []
    for scenario in planar.scenarios:
        ctx.console.header(scenario.name)
        found = [
            *rigid_rows(planar, scenario, ctx.console),
            *compliant_rows(planar, scenario),
            *adaptive_rows(planar, scenario),
        ]
        for (model, branch), group in groupby(found, key=lambda r: (r[1], r[2])):
            shown = ", ".join(f"{r[3]}={format_cell(r[4])}" for r in group)
            ctx.console.print(f"{model} ({branch}): {shown}")
        rows += found

    write_table(ctx, "planar_compare.csv", HEADER, rows)
