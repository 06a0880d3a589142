"""Contact forces of the adaptive-arch foot: heel, obstacle and tip.

The traction beam meets the ground at α₁ (heel side), α₂ (tip side) and
α_H (ankle). Forces follow from vertical and moment balance and always sum
to the load P.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "AdaptiveArchParams",
    "AdaptiveForces",
    "AdmissibleComRange",
    "adaptive_arch_forces",
    "adaptive_admissible_com_range",
]

_HALF_PI = math.pi / 2.0


@dataclass(frozen=True, slots=True)
class AdaptiveArchParams:
    sole_length: float
    load: float
    com_position: float
    alpha1: float
    alpha2: float
    alpha_h: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.sole_length) and self.sole_length > 0.0):
            raise ValueError(f"sole_length must be > 0 (got {self.sole_length})")
        if not (math.isfinite(self.load) and self.load > 0.0):
            raise ValueError(f"load must be > 0 (got {self.load})")
        if not 0.0 <= self.com_position <= self.sole_length:
            raise ValueError(
                f"com_position must lie in [0, {self.sole_length}] (got {self.com_position})"
            )
        for name in ("alpha1", "alpha2", "alpha_h"):
            angle = float(getattr(self, name))
            if not 0.0 < angle < _HALF_PI:
                raise ValueError(f"{name} must lie in (0, π/2) (got {angle})")


@dataclass(frozen=True, slots=True)
class AdaptiveForces:
    heel: float
    obstacle: float
    tip: float

    @property
    def total(self) -> float:
        return self.heel + self.obstacle + self.tip

    @property
    def admissible(self) -> bool:
        """All three contacts push (≥ 0)."""
        return self.heel >= 0.0 and self.obstacle >= 0.0 and self.tip >= 0.0


@dataclass(frozen=True, slots=True)
class AdmissibleComRange:
    """COM positions with all adaptive forces non-negative.

    Attributes:
        lower, upper: interval bounds [m]; meaningless when `empty`.
        stated_lower_bound: L·(1 − tan α_H·tan α₂)/(tan α_H·tan α₂), unclamped.
        force_lower_bound: least x keeping the tip force ≥ 0.
        empty: no admissible COM position.
    """

    lower: float
    upper: float
    stated_lower_bound: float
    force_lower_bound: float
    empty: bool

    def __contains__(self, x: float) -> bool:
        return not self.empty and self.lower <= x <= self.upper


def adaptive_arch_forces(params: AdaptiveArchParams) -> AdaptiveForces:
    """Heel, obstacle and tip forces; negative values are reported, not clamped."""
    length, load, x = params.sole_length, params.load, params.com_position
    t1 = math.tan(params.alpha1)
    t2 = math.tan(params.alpha2)
    th = math.tan(params.alpha_h)
    lever = load * (length - x) / length
    return AdaptiveForces(
        heel=lever * (1.0 - t1 * th),
        obstacle=lever * (t1 + t2) * th,
        tip=load * ((x - length) * t2 * th + x) / length,
    )


def adaptive_admissible_com_range(params: AdaptiveArchParams) -> AdmissibleComRange:
    """Interval [max(stated bound, tip-force bound, 0), L] of admissible COM positions."""
    length = params.sole_length
    t1 = math.tan(params.alpha1)
    product = math.tan(params.alpha_h) * math.tan(params.alpha2)
    stated = length * (1.0 - product) / product
    force_bound = length * product / (1.0 + product)
    lower = max(stated, force_bound, 0.0)
    empty = t1 * math.tan(params.alpha_h) > 1.0 or lower > length
    return AdmissibleComRange(
        lower=lower,
        upper=length,
        stated_lower_bound=stated,
        force_lower_bound=force_bound,
        empty=empty,
    )
