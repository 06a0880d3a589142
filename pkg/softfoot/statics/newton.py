"""Damped Newton iteration for small dense nonlinear systems.

Each step solves J·dx = −r and halves the step until the residual 2-norm
decreases. Convergence is judged on the max-norm. Failures come back as
values carrying the best iterate seen.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from typing import Literal

import numpy as np

from softfoot.core.numeric import EPS, FloatArray, max_norm
from softfoot.core.result import Err, Ok, Result

__all__ = [
    "JacobianMode",
    "NewtonOptions",
    "NewtonReport",
    "NewtonFailure",
    "finite_difference_jacobian",
    "newton",
]

JacobianMode = Literal["finite-difference", "analytic"]

VectorFunction = Callable[[FloatArray], FloatArray]
MatrixFunction = Callable[[FloatArray], FloatArray]


@dataclass(frozen=True, slots=True)
class NewtonOptions:
    """Solver knobs.

    Attributes:
        tol: max-norm convergence threshold; None picks the problem default.
        max_iter: iteration cap.
        min_step: smallest damping factor before the line search gives up.
        fd_step: relative finite-difference step, h_j = fd_step·max(1, |x_j|).
        jacobian: finite differences or the analytic jacobian.
    """

    tol: float | None = None
    max_iter: int = 100
    min_step: float = 2.0**-20
    fd_step: float = 1e-7
    jacobian: JacobianMode = "finite-difference"


@dataclass(frozen=True, slots=True)
class NewtonReport:
    x: FloatArray
    residual_norm: float
    iterations: int
    history: tuple[float, ...]


@dataclass(frozen=True, slots=True)
class NewtonFailure:
    kind: Literal["singular_jacobian", "stalled", "not_converged"]
    message: str
    iteration: int
    best_x: FloatArray
    best_norm: float
    history: tuple[float, ...]
    condition: float | None = None


def finite_difference_jacobian(
    fun: VectorFunction, x: FloatArray, step: float = 1e-7
) -> FloatArray:
    """Forward-difference jacobian with per-column step step·max(1, |x_j|)."""
    base = fun(x)
    jac = np.empty((base.shape[0], x.shape[0]), dtype=np.float64)
    for j in range(x.shape[0]):
        h = step * max(1.0, abs(float(x[j])))
        shifted = x.copy()
        shifted[j] += h
        jac[:, j] = (fun(shifted) - base) / h
    return jac


def newton(
    fun: VectorFunction,
    jac: MatrixFunction,
    x0: FloatArray,
    *,
    tol: float,
    max_iter: int = 100,
    min_step: float = 2.0**-20,
) -> Result[NewtonReport, NewtonFailure]:
    """Solve fun(x) = 0 from x0.

    A singular jacobian (LinAlgError or cond > 1/eps) is reported with the
    iteration it happened at.

    Returns:
        Ok(NewtonReport) once max|fun(x)| ≤ tol; `iterations` counts accepted
        steps, so a converged start reports 0. Err(NewtonFailure) otherwise.
    """
    x = x0.astype(np.float64, copy=True)
    r = fun(x)
    norm = max_norm(r)
    history = [norm]
    best_x, best_norm = x.copy(), norm

    def failure(
        kind: Literal["singular_jacobian", "stalled", "not_converged"],
        message: str,
        iteration: int,
        condition: float | None = None,
    ) -> Err[NewtonFailure]:
        return Err(
            NewtonFailure(
                kind=kind,
                message=message,
                iteration=iteration,
                best_x=best_x,
                best_norm=best_norm,
                history=tuple(history),
                condition=condition,
            )
        )

    for iteration in range(1, max_iter + 1):
        if norm <= tol:
            return Ok(
                NewtonReport(
                    x=x, residual_norm=norm, iterations=iteration - 1, history=tuple(history)
                )
            )

        jacobian = jac(x)
        condition = float(np.linalg.cond(jacobian))
        if not np.isfinite(condition) or condition > 1.0 / EPS:
            return failure(
                "singular_jacobian",
                f"singular jacobian at iteration {iteration} (cond ≈ {condition:.3g})",
                iteration,
                condition,
            )
        try:
            dx = np.linalg.solve(jacobian, -r)
        except np.linalg.LinAlgError:
            return failure(
                "singular_jacobian", f"singular jacobian at iteration {iteration}", iteration
            )

        merit = float(np.linalg.norm(r))
        step = 1.0
        while True:
            candidate = x + step * dx
            r_candidate = fun(candidate)
            if np.all(np.isfinite(r_candidate)) and float(np.linalg.norm(r_candidate)) < merit:
                break
            step *= 0.5
            if step < min_step:
                return failure(
                    "stalled",
                    f"line search stalled at iteration {iteration} (residual {norm:.3e})",
                    iteration,
                )

        x, r = candidate, r_candidate
        norm = max_norm(r)
        history.append(norm)
        if norm < best_norm:
            best_x, best_norm = x.copy(), norm

    if norm <= tol:
        return Ok(
            NewtonReport(x=x, residual_norm=norm, iterations=max_iter, history=tuple(history))
        )
    return failure(
        "not_converged",
        f"no convergence in {max_iter} iterations (best residual {best_norm:.3e})",
        max_iter,
    )
