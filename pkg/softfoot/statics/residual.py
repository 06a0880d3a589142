"""Nonlinear equilibrium residual of the foot and its jacobian.

Unknowns are packed as x = (q_0..q_{N-1}, F1, F2, F3, T) with N = n + 3.
Rows:

- 0..N-1: joint moment balance (M_m·m − arch reaction terms + tip force terms)
- N: vertical force balance of the whole foot
- N+1: moment balance of the whole foot about the heel
- N+2: ground constraint L·Σ sin θ_i − δ
- N+3: tendon constraint r·q − σ

The mid contact force F2 acts on the rigid arch, so it only enters the two
whole-foot rows.
"""

from __future__ import annotations

import math

import numpy as np

from softfoot.core.numeric import FloatArray, as_vector
from softfoot.statics.params import FootLoad, SoftFootParams

__all__ = [
    "is_degenerate",
    "arch_reaction",
    "assemble_residual",
    "residual_jacobian",
    "initial_guess",
    "bidiagonal",
]

_DEGENERATE_TOL = 1e-12


def is_degenerate(params: SoftFootParams) -> bool:
    """True when the arch reaction lever b·sin(ᾱ+β̄) vanishes."""
    return abs(params.arch_sine) <= _DEGENERATE_TOL * params.arch_b


def arch_reaction(params: SoftFootParams, load: FootLoad) -> float:
    """R_M from the torque balance of the arch body (independent of q)."""
    return (load.force * params.load_arm + params.e0 * params.pretension) / params.arch_sine


def bidiagonal(size: int) -> FloatArray:
    """M_m: unit diagonal, −1 on the superdiagonal."""
    return np.eye(size) - np.eye(size, k=1)


def _joint_torques(params: SoftFootParams, q: FloatArray, tension: float) -> FloatArray:
    """m = −diag(e)·q + e0·β_pre·e_0 + r·T."""
    m = -params.stiffness() * q + params.radii() * tension
    m[0] += params.e0 * params.pretension
    return m


def _split(params: SoftFootParams, x: FloatArray) -> tuple[FloatArray, float, float, float, float]:
    if x.shape[0] != params.unknowns:
        raise ValueError(f"candidate needs n + 7 = {params.unknowns} entries (got {x.shape[0]})")
    n_joints = params.joints
    return (
        x[:n_joints],
        float(x[n_joints]),
        float(x[n_joints + 1]),
        float(x[n_joints + 2]),
        float(x[n_joints + 3]),
    )


def assemble_residual(
    params: SoftFootParams,
    load: FootLoad,
    candidate: FloatArray,
) -> FloatArray:
    """Evaluate the n + 7 equilibrium equations at `candidate`.

    Raises:
        ValueError: on a candidate of the wrong size or degenerate arch geometry.
    """
    if is_degenerate(params):
        raise ValueError("degenerate arch geometry")
    x = as_vector(candidate)
    q, f1, f2, f3, tension = _split(params, x)
    n_joints = params.joints
    length = params.link_length
    alpha = params.alpha_bar

    theta = np.cumsum(q)
    sines = np.sin(theta)
    cosines = np.cos(theta)
    u = params.arch_mask()
    reaction = arch_reaction(params, load)

    m = _joint_torques(params, q, tension)
    moments = m.copy()
    moments[:-1] -= m[1:]
    moments -= reaction * math.cos(alpha) * length * u * sines
    moments -= (reaction * math.sin(alpha) * u - f3) * length * cosines

    residual = np.empty(params.unknowns, dtype=np.float64)
    residual[:n_joints] = moments
    residual[n_joints] = load.force - f1 - f2 - f3
    residual[n_joints + 1] = (
        load.force * params.load_arm - params.mid_contact * f2 - params.tip_contact(q) * f3
    )
    residual[n_joints + 2] = length * float(np.sum(sines)) - params.delta
    residual[n_joints + 3] = float(params.radii() @ q) - params.sigma
    return residual


def residual_jacobian(
    params: SoftFootParams,
    load: FootLoad,
    candidate: FloatArray,
) -> FloatArray:
    """Analytic jacobian of `assemble_residual` with respect to the unknowns."""
    if is_degenerate(params):
        raise ValueError("degenerate arch geometry")
    x = as_vector(candidate)
    q, _f1, _f2, f3, _tension = _split(params, x)
    n_joints = params.joints
    n = params.n
    length = params.link_length
    alpha = params.alpha_bar

    theta = np.cumsum(q)
    sines = np.sin(theta)
    cosines = np.cos(theta)
    u = params.arch_mask()
    reaction = arch_reaction(params, load)
    e = params.stiffness()
    r = params.radii()

    jac = np.zeros((params.unknowns, params.unknowns), dtype=np.float64)

    # d(M_m·m)/dq = −M_m·diag(e)
    jac[:n_joints, :n_joints] = -bidiagonal(n_joints) * e[np.newaxis, :]
    row_weight = (
        -reaction * math.cos(alpha) * length * u * cosines
        + (reaction * math.sin(alpha) * u - f3) * length * sines
    )
    jac[:n_joints, :n_joints] += np.tril(np.ones((n_joints, n_joints))) * row_weight[:, np.newaxis]
    jac[:n_joints, n_joints + 2] = length * cosines
    jac[:n_joints, n_joints + 3] = bidiagonal(n_joints) @ r

    jac[n_joints, n_joints : n_joints + 3] = -1.0

    outer = q[n] + q[n + 1]
    jac[n_joints + 1, n] = f3 * length * (math.sin(q[n]) + math.sin(outer))
    jac[n_joints + 1, n + 1] = f3 * length * math.sin(outer)
    jac[n_joints + 1, n_joints + 1] = -params.mid_contact
    jac[n_joints + 1, n_joints + 2] = -params.tip_contact(q)

    jac[n_joints + 2, :n_joints] = length * np.cumsum(cosines[::-1])[::-1]
    jac[n_joints + 3, :n_joints] = r
    return jac


def initial_guess(params: SoftFootParams, load: FootLoad) -> FloatArray:
    """q = 0, T = 0 and the rigid lever split of the load between heel and tip."""
    x = np.zeros(params.unknowns, dtype=np.float64)
    n_joints = params.joints
    f3 = load.force * params.load_arm / params.tip_contact()
    x[n_joints] = load.force - f3
    x[n_joints + 2] = f3
    return x
