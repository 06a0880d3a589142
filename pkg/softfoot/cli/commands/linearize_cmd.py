"""Linearize command - compare nonlinear, linear and closed-form solutions."""

from __future__ import annotations

from dataclasses import dataclass
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
from softfoot.core.numeric import max_norm
from softfoot.core.result import Err
from softfoot.harness.export import Cell
from softfoot.output.errors import print_statics_error
from softfoot.statics.equilibrium import solve_equilibrium
from softfoot.statics.linear import (
    assemble_linear_system,
    linear_state,
    solve_closed_form,
    solve_linear,
)
from softfoot.statics.params import EquilibriumState
from softfoot.statics.sampling import random_load, random_params

HEADER = ("unknown", "nonlinear", "linear", "closed_form")

EQUIVALENCE_DRAWS = 1000
EQUIVALENCE_LINKS = (2, 10)


@dataclass(frozen=True, slots=True)
class EquivalenceReport:
    """Largest relative gap between closed-form and dense-solve q over random feet."""

    draws: int
    failures: int
    max_deviation: float


def closed_form_equivalence(seed: int, draws: int = EQUIVALENCE_DRAWS) -> EquivalenceReport:
    rng = np.random.default_rng(seed)
    low, high = EQUIVALENCE_LINKS
    failures = 0
    worst = 0.0
    for _ in range(draws):
        params = random_params(rng, int(rng.integers(low, high + 1)))
        load = random_load(rng)
        assembled = assemble_linear_system(params, load)
        if isinstance(assembled, Err):
            failures += 1
            continue
        direct = solve_linear(assembled.value)
        closed = solve_closed_form(params, load)
        if isinstance(direct, Err) or isinstance(closed, Err):
            failures += 1
            continue
        scale = max(max_norm(direct.value.q), np.finfo(np.float64).tiny)
        worst = max(worst, max_norm(closed.value - direct.value.q) / scale)
    return EquivalenceReport(draws=draws, failures=failures, max_deviation=worst)


def _unknown_names(joints: int) -> list[str]:
    return [f"q{i}_rad" for i in range(joints)] + ["F1_N", "F2_N", "F3_N", "T_N"]


def _column(state: EquilibriumState | None, size: int) -> list[Cell]:
    if state is None:
        return [None] * size
    return [float(v) for v in state.unknowns()]


def _deviation(a: EquilibriumState | None, b: EquilibriumState | None) -> float | None:
    if a is None or b is None:
        return None
    return max_norm(a.q - b.q)


def linearize(
    config: Path | None = CONFIG_OPTION,
    out: Path = OUT_OPTION,
    units: Units | None = UNITS_OPTION,
    seed: int | None = SEED_OPTION,
    overrides: list[str] | None = SET_OPTION,
) -> None:
    """Solve with all three methods and report their deviations."""
    ctx = context_from_options(config, out, units, seed, overrides)
    params = ctx.config.params
    load = ctx.config.load

    states: dict[str, EquilibriumState | None] = {}
    failures = 0
    solved = {
        "nonlinear": solve_equilibrium(params, load, None, ctx.config.solver),
        "linear": linear_state(params, load, "linear"),
        "closed_form": linear_state(params, load, "closed-form"),
    }
    for method, result in solved.items():
        if isinstance(result, Err):
            print_statics_error(result.error, ctx.console, method)
            states[method] = None
            failures += 1
        else:
            states[method] = result.value

    names = _unknown_names(params.joints)
    nonlinear, linear, closed = (_column(states[method], len(names)) for method in HEADER[1:])
    rows = list(zip(names, nonlinear, linear, closed, strict=True))

    ctx.console.header(f"linearization at {load.force:.6g} N")
    pairs = (("linear", "nonlinear"), ("closed_form", "nonlinear"), ("closed_form", "linear"))
    for a, b in pairs:
        gap = _deviation(states[a], states[b])
        shown = "n/a" if gap is None else f"{gap:.3e} rad"
        ctx.console.print(f"max |q_{a} - q_{b}| = {shown}")

    if ctx.config.seed is not None:
        report = closed_form_equivalence(ctx.config.seed)
        ctx.console.print(
            f"closed form vs dense solve over {report.draws} random feet "
            f"(seed {ctx.config.seed}): max relative deviation {report.max_deviation:.3e}"
        )
        failures += report.failures

    write_table(ctx, "linearize.csv", HEADER, rows)
    finish(ctx, failures)
