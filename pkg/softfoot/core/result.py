"""Ok/Err values for fallible numerical operations.

Solvers, parsers and exporters return a Result instead of raising, so a
failed solve at one sweep point becomes data the caller can record:

    match solve_equilibrium(params, load):
        case Ok(state):
            rows.append(state)
        case Err(error):
            diagnostics.append(error.message)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Generic, TypeAlias, TypeVar

__all__ = ["Ok", "Err", "Result"]

T = TypeVar("T")
E = TypeVar("E")


@dataclass(frozen=True, slots=True)
class Ok(Generic[T]):
    """Successful outcome carrying `value`."""

    value: T


@dataclass(frozen=True, slots=True)
class Err(Generic[E]):
    """Failed outcome carrying `error` (a StaticsError, ConfigError, ...)."""

    error: E


Result: TypeAlias = Ok[T] | Err[E]
