"""Small-angle linearization of the foot equilibrium.

With sin θ ≈ θ, cos θ ≈ 1 and ℓ3 frozen at q = 0, the joint rows become

    −𝔼·q + r·T + c·(L·F3) = m_E
    r·q = σ
    c·q = δ/L

with 𝔼 = diag(e0, E) + g·K, g = R_M·cos ᾱ·L, K = M_m⁻¹·U·P and
m_E = L·R_M·sin ᾱ·w − e0·β_pre·e_0, w = K·e_0. This is the optimality system
of a quadratic program, so the block matrix is symmetric and the unknowns
(q, T, L·F3) are unique whenever 𝔼 is positive definite on the constraint
null space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from softfoot.core.numeric import EPS, FloatArray, max_norm
from softfoot.core.result import Err, Ok, Result
from softfoot.statics.errors import StaticsError, degenerate_geometry
from softfoot.statics.params import EquilibriumState, FootLoad, SoftFootParams
from softfoot.statics.residual import arch_reaction, assemble_residual, is_degenerate

LinearMethod = Literal["linear", "closed-form"]

__all__ = [
    "LinearMethod",
    "LinearEquilibriumSystem",
    "LinearSolution",
    "arch_kernel",
    "load_weights",
    "depth_weights",
    "load_coefficients",
    "assemble_linear_system",
    "solve_linear",
    "solve_closed_form",
    "closed_form_load_derivative",
    "linear_state",
]


def arch_kernel(params: SoftFootParams) -> FloatArray:
    """K with K_ij = n + 1 − max(i, j) for i, j ≤ n, zero elsewhere."""
    kernel = np.zeros((params.joints, params.joints), dtype=np.float64)
    idx = np.arange(params.n + 1)
    kernel[: params.n + 1, : params.n + 1] = (params.n + 1) - np.maximum.outer(idx, idx)
    return kernel


def load_weights(params: SoftFootParams) -> FloatArray:
    """w = K·e_0 = (n + 1, n, …, 1, 0, 0)."""
    return arch_kernel(params)[:, 0].copy()


def depth_weights(params: SoftFootParams) -> FloatArray:
    """c = (n + 3, n + 2, …, 1)."""
    return np.arange(params.joints, 0, -1, dtype=np.float64)


def load_coefficients(params: SoftFootParams) -> tuple[float, float]:
    """(μ_F, γ_F): per-newton growth of m_E (along w) and of 𝔼 (along K)."""
    scale = params.link_length * params.load_arm / params.arch_sine
    return scale * math.sin(params.alpha_bar), scale * math.cos(params.alpha_bar)


@dataclass(frozen=True, slots=True)
class LinearEquilibriumSystem:
    """Assembled small-angle system, unknowns ordered (q, T, L·F3).

    Attributes:
        matrix: (n + 5)×(n + 5) block matrix [[−𝔼, ℛᵀ, dᵀ], [ℛ, 0, 0], [c, 0, 0]].
        rhs: (m_E, σ, δ/L).
        effective_stiffness: 𝔼.
        elastic_stiffness: diag(e0, E).
        correction: g·K, the load-dependent part of 𝔼.
        coupling: columns [ℛᵀ dᵀ].
        constraints: rows [ℛ; c].
        load_vector: m_E.
        constraint_rhs: (σ, δ/L).
    """

    matrix: FloatArray
    rhs: FloatArray
    effective_stiffness: FloatArray
    elastic_stiffness: FloatArray
    correction: FloatArray
    coupling: FloatArray
    constraints: FloatArray
    load_vector: FloatArray
    constraint_rhs: FloatArray

    @property
    def joints(self) -> int:
        return int(self.effective_stiffness.shape[0])

    @property
    def size(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def d(self) -> FloatArray:
        return self.coupling[:, 1]

    @property
    def c(self) -> FloatArray:
        return self.constraints[1]


@dataclass(frozen=True, slots=True)
class LinearSolution:
    """Solution of the small-angle system; `scaled_f3` is L·F3."""

    q: FloatArray
    tension: float
    scaled_f3: float


def assemble_linear_system(
    params: SoftFootParams, load: FootLoad
) -> Result[LinearEquilibriumSystem, StaticsError]:
    """Build 𝔼, m_E, coupling and constraint blocks for `load`."""
    if is_degenerate(params):
        return Err(degenerate_geometry())

    n_joints = params.joints
    length = params.link_length
    reaction = arch_reaction(params, load)
    kernel = arch_kernel(params)

    elastic = np.diag(params.stiffness())
    correction = reaction * math.cos(params.alpha_bar) * length * kernel
    effective = elastic + correction
    load_vector = length * reaction * math.sin(params.alpha_bar) * load_weights(params)
    load_vector[0] -= params.e0 * params.pretension

    radii = params.radii()
    c = depth_weights(params)
    coupling = np.column_stack([radii, c])
    constraints = np.vstack([radii, c])
    constraint_rhs = np.array([params.sigma, params.delta / length], dtype=np.float64)

    size = n_joints + 2
    matrix = np.zeros((size, size), dtype=np.float64)
    matrix[:n_joints, :n_joints] = -effective
    matrix[:n_joints, n_joints:] = coupling
    matrix[n_joints:, :n_joints] = constraints
    rhs = np.concatenate([load_vector, constraint_rhs])

    return Ok(
        LinearEquilibriumSystem(
            matrix=matrix,
            rhs=rhs,
            effective_stiffness=effective,
            elastic_stiffness=elastic,
            correction=correction,
            coupling=coupling,
            constraints=constraints,
            load_vector=load_vector,
            constraint_rhs=constraint_rhs,
        )
    )


def _near_singular(matrix: FloatArray) -> tuple[bool, float]:
    """(singular?, condition number) with cond > 1/eps or numerical rank deficiency."""
    condition = float(np.linalg.cond(matrix))
    rank_deficient = int(np.linalg.matrix_rank(matrix)) < matrix.shape[0]
    return (not np.isfinite(condition) or condition > 1.0 / EPS or rank_deficient), condition


def _power_of_two_scaling(matrix: FloatArray) -> FloatArray:
    """Symmetric row/column scaling D (powers of two) so D·A·D has O(1) rows."""
    row_max = np.max(np.abs(matrix), axis=1)
    row_max[row_max == 0.0] = 1.0
    return np.exp2(-np.round(0.5 * np.log2(row_max)))


def _solve_dense(
    matrix: FloatArray, rhs: FloatArray, kind: str
) -> Result[FloatArray, StaticsError]:
    scale = _power_of_two_scaling(matrix)
    scaled = matrix * scale[:, np.newaxis] * scale[np.newaxis, :]
    singular, condition = _near_singular(scaled)
    if singular:
        return Err(
            StaticsError(
                kind="singular_system",
                message=f"singular {kind} (cond ≈ {condition:.3g})",
                condition=condition,
            )
        )
    try:
        y = np.linalg.solve(scaled, rhs * scale)
    except np.linalg.LinAlgError:
        return Err(StaticsError(kind="singular_system", message=f"singular {kind}"))
    return Ok(y * scale)


def solve_linear(system: LinearEquilibriumSystem) -> Result[LinearSolution, StaticsError]:
    """Direct dense solve of the block system."""
    result = _solve_dense(system.matrix, system.rhs, "linear system")
    if isinstance(result, Err):
        return result
    x = result.value
    n_joints = system.joints
    return Ok(
        LinearSolution(
            q=x[:n_joints], tension=float(x[n_joints]), scaled_f3=float(x[n_joints + 1])
        )
    )


def _block_inverse(system: LinearEquilibriumSystem) -> Result[LinearSolution, StaticsError]:
    """Block elimination of q through 𝔼, then the 2×2 reduced constraint system."""
    effective = system.effective_stiffness
    singular, condition = _near_singular(effective)
    if singular:
        return Err(
            StaticsError(
                kind="singular_stiffness",
                message=f"singular effective stiffness (cond ≈ {condition:.3g})",
                condition=condition,
            )
        )
    coupling = system.coupling
    constraints = system.constraints
    inv_load = np.linalg.solve(effective, system.load_vector)
    inv_coupling = np.linalg.solve(effective, coupling)
    reduced = constraints @ inv_coupling
    degenerate, reduced_condition = _near_singular(reduced)
    if degenerate:
        return Err(
            StaticsError(
                kind="constraint_degeneracy",
                message="constraint degeneracy",
                hint="the tendon and ground constraints are not independent for this stiffness",
                condition=reduced_condition,
            )
        )
    # q = −(I − 𝔼⁻¹B S⁻¹A)·𝔼⁻¹m_E + 𝔼⁻¹B S⁻¹·s
    projected = inv_load - inv_coupling @ np.linalg.solve(reduced, constraints @ inv_load)
    q = -projected + inv_coupling @ np.linalg.solve(reduced, system.constraint_rhs)
    multipliers = np.linalg.solve(reduced, system.constraint_rhs + constraints @ inv_load)
    return Ok(LinearSolution(q=q, tension=float(multipliers[0]), scaled_f3=float(multipliers[1])))


def solve_closed_form(params: SoftFootParams, load: FootLoad) -> Result[FloatArray, StaticsError]:
    """q from the block-inverse formula, without forming the full block matrix inverse."""
    system = assemble_linear_system(params, load)
    if isinstance(system, Err):
        return system
    solution = _block_inverse(system.value)
    if isinstance(solution, Err):
        return solution
    return Ok(solution.value.q)


def closed_form_load_derivative(
    params: SoftFootParams, load: FootLoad
) -> Result[FloatArray, StaticsError]:
    """dq/dF_P of the closed-form solution.

    Differentiating −𝔼·q + B·λ = m_E, A·q = s with d𝔼/dF = γ_F·K and
    dm_E/dF = μ_F·w gives the same block matrix with rhs (μ_F·w + γ_F·K·q, 0).
    """
    assembled = assemble_linear_system(params, load)
    if isinstance(assembled, Err):
        return assembled
    system = assembled.value
    solution = _block_inverse(system)
    if isinstance(solution, Err):
        return solution
    mu, gamma = load_coefficients(params)
    drive = mu * load_weights(params) + gamma * (arch_kernel(params) @ solution.value.q)
    rhs = np.concatenate([drive, np.zeros(2)])
    derivative = _solve_dense(system.matrix, rhs, "linear system")
    if isinstance(derivative, Err):
        return derivative
    return Ok(derivative.value[: system.joints])


def linear_state(
    params: SoftFootParams, load: FootLoad, method: LinearMethod = "closed-form"
) -> Result[EquilibriumState, StaticsError]:
    """Full state from a small-angle solve.

    F3 and T come from the linear solve; F2 and F1 close the whole-foot
    balance with ℓ3 frozen at q = 0. The reported residual is that of the
    nonlinear system, which measures the small-angle error.
    """
    assembled = assemble_linear_system(params, load)
    if isinstance(assembled, Err):
        return assembled
    system = assembled.value
    solved = _block_inverse(system) if method == "closed-form" else solve_linear(system)
    if isinstance(solved, Err):
        return solved
    solution = solved.value

    f3 = solution.scaled_f3 / params.link_length
    f2 = (load.force * params.load_arm - params.tip_contact() * f3) / params.mid_contact
    f1 = load.force - f2 - f3
    x = np.concatenate([solution.q, [f1, f2, f3, solution.tension]])
    residual = max_norm(assemble_residual(params, load, x))
    return Ok(
        EquilibriumState.from_unknowns(
            x,
            residual_norm=residual,
            iterations=0,
            method=method,
        )
    )
