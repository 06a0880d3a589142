"""Nonlinear equilibrium solve of the foot."""

from __future__ import annotations

import numpy as np

from softfoot.core.numeric import FloatArray, as_vector, max_norm
from softfoot.core.result import Err, Ok, Result
from softfoot.statics.errors import StaticsError, degenerate_geometry
from softfoot.statics.newton import NewtonOptions, finite_difference_jacobian, newton
from softfoot.statics.params import EquilibriumState, FootLoad, SoftFootParams
from softfoot.statics.residual import (
    assemble_residual,
    initial_guess,
    is_degenerate,
    residual_jacobian,
)

__all__ = ["default_tolerance", "solve_equilibrium"]


def default_tolerance(params: SoftFootParams, load: FootLoad) -> float:
    """1e-10·max(1, F_P·L)."""
    return 1e-10 * max(1.0, load.force * params.link_length)


def solve_equilibrium(
    params: SoftFootParams,
    load: FootLoad,
    initial: EquilibriumState | FloatArray | None = None,
    options: NewtonOptions | None = None,
) -> Result[EquilibriumState, StaticsError]:
    """Damped Newton solve of the n + 7 equilibrium equations.

    Starts from `initial` when given, otherwise from q = 0 with the rigid
    lever split of the load. Failures carry the best iterate and the
    residual history.
    """
    if is_degenerate(params):
        return Err(degenerate_geometry())
    opts = options or NewtonOptions()
    tol = opts.tol if opts.tol is not None else default_tolerance(params, load)

    match initial:
        case None:
            x0 = initial_guess(params, load)
        case EquilibriumState():
            x0 = initial.unknowns()
        case _:
            x0 = as_vector(initial, params.unknowns)

    def fun(x: FloatArray) -> FloatArray:
        return assemble_residual(params, load, x)

    def jac(x: FloatArray) -> FloatArray:
        if opts.jacobian == "analytic":
            return residual_jacobian(params, load, x)
        return finite_difference_jacobian(fun, x, opts.fd_step)

    outcome = newton(fun, jac, x0, tol=tol, max_iter=opts.max_iter, min_step=opts.min_step)
    if isinstance(outcome, Err):
        failure = outcome.error
        best = EquilibriumState.from_unknowns(
            failure.best_x,
            residual_norm=failure.best_norm,
            iterations=failure.iteration,
            method="nonlinear",
        )
        return Err(
            StaticsError(
                kind=failure.kind,
                message=failure.message,
                iteration=failure.iteration,
                best=best,
                residual_history=failure.history,
                condition=failure.condition,
            )
        )

    report = outcome.value
    return Ok(
        EquilibriumState.from_unknowns(
            report.x,
            residual_norm=max_norm(fun(report.x)),
            iterations=report.iterations,
            method="nonlinear",
        )
    )


def constraint_errors(params: SoftFootParams, q: FloatArray) -> tuple[float, float]:
    """(|L·Σ sin θ_i − δ|, |r·q − σ|) for a configuration."""
    ground = params.link_length * float(np.sum(np.sin(np.cumsum(q)))) - params.delta
    tendon = float(params.radii() @ q) - params.sigma
    return abs(ground), abs(tendon)
