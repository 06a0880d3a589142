from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Literal

if TYPE_CHECKING:
    from softfoot.statics.params import EquilibriumState

StaticsErrorKind = Literal[
    "degenerate_geometry",
    "singular_jacobian",
    "stalled",
    "not_converged",
    "singular_system",
    "singular_stiffness",
    "constraint_degeneracy",
    "no_bracket",
]


@dataclass(frozen=True, slots=True)
class StaticsError:
    kind: StaticsErrorKind
    message: str
    hint: str | None = None
    iteration: int | None = None
    best: EquilibriumState | None = None
    residual_history: tuple[float, ...] = ()
    condition: float | None = None


def degenerate_geometry() -> StaticsError:
    return StaticsError(
        kind="degenerate_geometry",
        message="degenerate arch geometry",
        hint="b·sin(alpha_bar + beta_bar) must be nonzero",
    )
