"""Compliance of the foot to vertical compression."""

from __future__ import annotations

import math
from typing import Literal

import numpy as np

from softfoot.core.numeric import FloatArray, as_vector
from softfoot.core.result import Err, Ok, Result
from softfoot.statics.equilibrium import solve_equilibrium
from softfoot.statics.errors import StaticsError
from softfoot.statics.linear import closed_form_load_derivative, solve_closed_form
from softfoot.statics.newton import NewtonOptions
from softfoot.statics.params import FootLoad, SoftFootParams

__all__ = [
    "ComplianceMethod",
    "DerivativeMode",
    "contact_jacobian",
    "load_step",
    "compliance_to_compression",
]

ComplianceMethod = Literal["nonlinear", "closed-form"]
DerivativeMode = Literal["finite-difference", "analytic"]


def contact_jacobian(params: SoftFootParams, q: FloatArray) -> FloatArray:
    """J(q) = L·cos²ᾱ·(S_0, …, S_{n+2}) with S_i = sin(q_0 + … + q_i)."""
    angles = as_vector(q, params.joints)
    return params.link_length * math.cos(params.alpha_bar) ** 2 * np.sin(np.cumsum(angles))


def load_step(force: float) -> float:
    """Default load step h_F = max(1e-4·F_P, 1e-3 N)."""
    return max(1e-4 * force, 1e-3)


def _configuration(
    params: SoftFootParams,
    force: float,
    method: ComplianceMethod,
    options: NewtonOptions | None,
) -> Result[FloatArray, StaticsError]:
    load = FootLoad(force)
    if method == "closed-form":
        return solve_closed_form(params, load)
    state = solve_equilibrium(params, load, options=options)
    if isinstance(state, Err):
        return state
    return Ok(state.value.q)


def _finite_difference(
    params: SoftFootParams,
    load: FootLoad,
    step: float,
    method: ComplianceMethod,
    options: NewtonOptions | None,
) -> Result[FloatArray, StaticsError]:
    """dq/dF_P, central unless the lower point would be a negative load."""
    lower_force = load.force - step
    upper = _configuration(params, load.force + step, method, options)
    if isinstance(upper, Err):
        return upper
    if lower_force < 0.0:
        base = _configuration(params, load.force, method, options)
        if isinstance(base, Err):
            return base
        return Ok((upper.value - base.value) / step)
    lower = _configuration(params, lower_force, method, options)
    if isinstance(lower, Err):
        return lower
    return Ok((upper.value - lower.value) / (2.0 * step))


def compliance_to_compression(
    params: SoftFootParams,
    load: FootLoad,
    *,
    step: float | None = None,
    method: ComplianceMethod = "nonlinear",
    derivative: DerivativeMode = "finite-difference",
    options: NewtonOptions | None = None,
) -> Result[float, StaticsError]:
    """J(q)·dq/dF_P at the equilibrium under `load` [m/N].

    `method` picks the model that produces q(F_P). The closed form also
    admits an analytic load derivative; the nonlinear model is always
    differenced.
    """
    q = _configuration(params, load.force, method, options)
    if isinstance(q, Err):
        return q

    if method == "closed-form" and derivative == "analytic":
        dq = closed_form_load_derivative(params, load)
    else:
        h = step if step is not None else load_step(load.force)
        if not (math.isfinite(h) and h > 0.0):
            raise ValueError(f"load step must be > 0 (got {h})")
        dq = _finite_difference(params, load, h, method, options)
    if isinstance(dq, Err):
        return dq

    return Ok(float(contact_jacobian(params, q.value) @ dq.value))
