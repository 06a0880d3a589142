"""Error presentation utilities.

Centralized error formatting and exit code mapping for consistent UX.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from softfoot.core.errors import ErrorCode
from softfoot.output.console import Style

if TYPE_CHECKING:
    from softfoot.core.config import ConfigError
    from softfoot.harness.errors import ExportError, HarnessError
    from softfoot.output.console import ConsoleProtocol
    from softfoot.planar.rigid import PlanarError
    from softfoot.statics.errors import StaticsError

__all__ = [
    "print_config_error",
    "config_error_exit_code",
    "print_statics_error",
    "statics_error_exit_code",
    "print_export_error",
    "export_error_exit_code",
    "print_harness_error",
    "print_planar_error",
]


def _hint(hint: str | None, console: ConsoleProtocol) -> None:
    if hint:
        console.print(f"hint: {hint}", Style.DIM)


def print_config_error(error: ConfigError, console: ConsoleProtocol) -> None:
    """Print a config error with the file and key it concerns."""
    console.error(f"invalid config: {error.message}")
    if error.path is not None:
        console.print(f"file: {error.path}", Style.DIM)


def config_error_exit_code(error: ConfigError) -> int:
    del error
    return int(ErrorCode.USER_ERROR)


def print_statics_error(error: StaticsError, console: ConsoleProtocol, label: str = "") -> None:
    """Print a solver failure with its iteration, residual trail and conditioning."""
    prefix = f"{label}: " if label else ""
    match error.kind:
        case "degenerate_geometry":
            console.error(f"{prefix}degenerate geometry: {error.message}")
        case "not_converged" | "stalled":
            console.error(f"{prefix}solver {error.kind.replace('_', ' ')}: {error.message}")
            if error.iteration is not None:
                console.print(f"iterations: {error.iteration}", Style.DIM)
            if error.residual_history:
                console.print(f"final residual: {error.residual_history[-1]:.3e}", Style.DIM)
        case "singular_jacobian" | "singular_system" | "singular_stiffness":
            console.error(f"{prefix}{error.message}")
            if error.condition is not None:
                console.print(f"condition estimate: {error.condition:.3e}", Style.DIM)
        case "constraint_degeneracy" | "no_bracket":
            console.error(f"{prefix}{error.message}")
    _hint(error.hint, console)


def statics_error_exit_code(error: StaticsError) -> int:
    """Get exit code for a statics error."""
    match error.kind:
        case "degenerate_geometry":
            return int(ErrorCode.USER_ERROR)
        case (
            "singular_jacobian"
            | "stalled"
            | "not_converged"
            | "singular_system"
            | "singular_stiffness"
            | "constraint_degeneracy"
            | "no_bracket"
        ):
            return int(ErrorCode.SOLVER_ERROR)
    # Fallback for exhaustiveness
    return int(ErrorCode.INTERNAL_ERROR)


def print_export_error(error: ExportError, console: ConsoleProtocol) -> None:
    console.error(f"{error.message} ({error.path})")
    _hint(error.hint, console)


def export_error_exit_code(error: ExportError) -> int:
    """Get exit code for an export error."""
    match error.kind:
        case "write_failed" | "read_failed":
            return int(ErrorCode.IO_ERROR)
        case "bad_table":
            return int(ErrorCode.INTERNAL_ERROR)
    # Fallback for exhaustiveness
    return int(ErrorCode.INTERNAL_ERROR)


def print_harness_error(error: HarnessError, console: ConsoleProtocol, label: str = "") -> None:
    prefix = f"{label}: " if label else ""
    console.warning(f"{prefix}{error.message}")
    _hint(error.hint, console)


def print_planar_error(error: PlanarError, console: ConsoleProtocol, label: str = "") -> None:
    prefix = f"{label}: " if label else ""
    console.warning(f"{prefix}{error.message}")
    _hint(error.hint, console)
