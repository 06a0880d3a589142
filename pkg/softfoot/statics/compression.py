"""Compression of the foot under the ankle load and stiffness calibration.

Compression is the vertical descent of the load point. For the small-angle
model it is the work-conjugate quadratic form

    u(q) = −μ_F·wᵀq − ½·γ_F·qᵀKq

whose stationary points under the constraints are exactly the solutions of
the linear system. The full compression width is its limit at infinite load,
where the elastic terms vanish against the load terms.
"""

from __future__ import annotations

import math
from dataclasses import replace
from typing import Literal

import numpy as np
from scipy.optimize import brentq

from softfoot.core.numeric import EPS, FloatArray, as_vector
from softfoot.core.result import Err, Ok, Result
from softfoot.statics.equilibrium import solve_equilibrium
from softfoot.statics.errors import StaticsError
from softfoot.statics.linear import (
    arch_kernel,
    assemble_linear_system,
    load_coefficients,
    load_weights,
    solve_closed_form,
)
from softfoot.statics.newton import NewtonOptions
from softfoot.statics.params import FootLoad, SoftFootParams

__all__ = [
    "CompressionMethod",
    "compression",
    "nonlinear_compression",
    "compression_width",
    "compression_fraction",
    "calibrate_stiffness",
    "with_uniform_stiffness",
]

CompressionMethod = Literal["closed-form", "nonlinear"]

_LOG_STIFFNESS_BRACKET = (math.log(1e-6), math.log(1e6))


def compression(params: SoftFootParams, q: FloatArray) -> float:
    """Quadratic load-point descent u(q) of the small-angle model [m]."""
    angles = as_vector(q, params.joints)
    mu, gamma = load_coefficients(params)
    kernel = arch_kernel(params)
    return float(-mu * (load_weights(params) @ angles) - 0.5 * gamma * (angles @ kernel @ angles))


def nonlinear_compression(params: SoftFootParams, q: FloatArray) -> float:
    """Exact load-point descent [m].

    (x_H·L/(b·sin(ᾱ+β̄)))·Σ_{i≤n}[cos(θ_i + ᾱ) − cos ᾱ]
    """
    theta = np.cumsum(as_vector(q, params.joints))[: params.n + 1]
    alpha = params.alpha_bar
    scale = params.load_arm * params.link_length / params.arch_sine
    return float(scale * np.sum(np.cos(theta + alpha) - math.cos(alpha)))


def _limit_configuration(params: SoftFootParams) -> Result[FloatArray, StaticsError]:
    """q at infinite load: −γ_F·K·q + B·λ = μ_F·w, A·q = s."""
    assembled = assemble_linear_system(params, FootLoad(0.0))
    if isinstance(assembled, Err):
        return assembled
    system = assembled.value
    mu, gamma = load_coefficients(params)
    n_joints = params.joints

    matrix = system.matrix.copy()
    matrix[:n_joints, :n_joints] = -gamma * arch_kernel(params)
    rhs = np.concatenate([mu * load_weights(params), system.constraint_rhs])
    condition = float(np.linalg.cond(matrix))
    if not np.isfinite(condition) or condition > 1.0 / EPS:
        return Err(
            StaticsError(
                kind="singular_system",
                message=f"singular infinite-load system (cond ≈ {condition:.3g})",
                hint="the toe joints must be fixed by the tendon and ground constraints",
                condition=condition,
            )
        )
    return Ok(np.linalg.solve(matrix, rhs)[:n_joints])


def compression_width(params: SoftFootParams) -> Result[float, StaticsError]:
    """Full compression width u(q∞) − u(q(0)) [m].

    Independent of the stiffnesses for an unpretensioned foot; with pretension
    q(0) and so the width depend on the ratios e_i/e0 only.
    """
    limit = _limit_configuration(params)
    if isinstance(limit, Err):
        return limit
    unloaded = solve_closed_form(params, FootLoad(0.0))
    if isinstance(unloaded, Err):
        return unloaded
    return Ok(compression(params, limit.value) - compression(params, unloaded.value))


def compression_fraction(
    params: SoftFootParams,
    load: FootLoad,
    method: CompressionMethod = "closed-form",
    options: NewtonOptions | None = None,
) -> Result[float, StaticsError]:
    """Compression under `load` as a fraction of the full width.

    `closed-form` measures u between the closed-form q at zero and full load;
    `nonlinear` measures the exact descent between the solved nonlinear states
    at zero and full load, against the same width.
    """
    width = compression_width(params)
    if isinstance(width, Err):
        return width

    if method == "closed-form":
        unloaded = solve_closed_form(params, FootLoad(0.0))
        if isinstance(unloaded, Err):
            return unloaded
        loaded = solve_closed_form(params, load)
        if isinstance(loaded, Err):
            return loaded
        descent = compression(params, loaded.value) - compression(params, unloaded.value)
    else:
        rest = solve_equilibrium(params, FootLoad(0.0), options=options)
        if isinstance(rest, Err):
            return rest
        state = solve_equilibrium(params, load, options=options)
        if isinstance(state, Err):
            return state
        descent = nonlinear_compression(params, state.value.q) - nonlinear_compression(
            params, rest.value.q
        )
    return Ok(descent / width.value)


def with_uniform_stiffness(
    params: SoftFootParams, e_bar: float, e0: float | None = None
) -> SoftFootParams:
    """Copy of `params` with E = ē·I and e0 = ē unless given."""
    return replace(
        params,
        joint_stiffness=(e_bar,) * (params.n + 2),
        e0=e_bar if e0 is None else e0,
    )


class _FractionFailure(Exception):
    def __init__(self, error: StaticsError) -> None:
        super().__init__(error.message)
        self.error = error


def calibrate_stiffness(
    params: SoftFootParams,
    target_load: FootLoad,
    target_fraction: float = 0.5,
    *,
    e0: float | None = None,
) -> Result[float, StaticsError]:
    """Uniform stiffness ē at which `target_load` compresses the foot by `target_fraction`.

    The closed-form fraction decreases monotonically with ē, so the root is
    bracketed on log ē ∈ [log 1e-6, log 1e6] and refined with brentq.
    """
    if not 0.0 < target_fraction < 1.0:
        raise ValueError(f"target fraction must lie in (0, 1) (got {target_fraction})")

    def mismatch(log_e_bar: float) -> float:
        candidate = with_uniform_stiffness(params, math.exp(log_e_bar), e0)
        fraction = compression_fraction(candidate, target_load)
        if isinstance(fraction, Err):
            raise _FractionFailure(fraction.error)
        return fraction.value - target_fraction

    low, high = _LOG_STIFFNESS_BRACKET
    try:
        f_low, f_high = mismatch(low), mismatch(high)
        if f_low * f_high > 0.0:
            return Err(
                StaticsError(
                    kind="no_bracket",
                    message=(
                        f"no stiffness in [1e-6, 1e6] N·m/rad reaches compression fraction "
                        f"{target_fraction:g} at {target_load.force:g} N"
                    ),
                    hint="set foot.e_bar explicitly",
                )
            )
        root = brentq(mismatch, low, high, xtol=1e-12, rtol=1e-12)
    except _FractionFailure as failure:
        return Err(failure.error)
    return Ok(math.exp(float(root)))
