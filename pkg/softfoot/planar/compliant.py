"""Flat sole on two lumped springs at ±L/2 from its middle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from softfoot.statics.params import GRAVITY

__all__ = [
    "StabilityConvention",
    "CompliantLumpedParams",
    "StiffnessBound",
    "compliant_tilt_angle",
    "k_min_support",
    "k_min_stability",
    "compliant_support_length",
]

StabilityConvention = Literal["as-written", "dimensional-correction"]


def _require_positive(**values: float) -> None:
    for name, value in values.items():
        if not (math.isfinite(value) and value > 0.0):
            raise ValueError(f"{name} must be > 0 (got {value})")


@dataclass(frozen=True, slots=True)
class CompliantLumpedParams:
    """Lumped compliant foot and the inverted pendulum standing on it.

    Attributes:
        spring_stiffness: k of each spring [N/m].
        sole_length: L [m].
        load: P, the weight carried by the foot [N].
        mass: m of the pendulum [kg].
        leg_height: H [m].
        gravity: g [m/s²].
    """

    spring_stiffness: float
    sole_length: float
    load: float
    mass: float
    leg_height: float
    gravity: float = GRAVITY

    def __post_init__(self) -> None:
        _require_positive(
            spring_stiffness=self.spring_stiffness,
            sole_length=self.sole_length,
            load=self.load,
            mass=self.mass,
            leg_height=self.leg_height,
            gravity=self.gravity,
        )


@dataclass(frozen=True, slots=True)
class StiffnessBound:
    stiffness: float
    convention: StabilityConvention


def compliant_tilt_angle(params: CompliantLumpedParams, com_offset: float) -> float:
    """Small tilt α = 2·P·x/(k·L²) for a COM offset x from the sole middle.

    Raises:
        ValueError: if |x| > L/2.
    """
    half = params.sole_length / 2.0
    if not abs(com_offset) <= half:
        raise ValueError(f"|com_offset| must be ≤ L/2 = {half} (got {com_offset})")
    return 2.0 * params.load * com_offset / (params.spring_stiffness * params.sole_length**2)


def k_min_support(load: float, sole_length: float, ankle_limit: float) -> float:
    """Least spring stiffness letting the COM reach the sole ends within the ankle limit."""
    _require_positive(load=load, sole_length=sole_length, ankle_limit=ankle_limit)
    return load / (sole_length * ankle_limit)


def k_min_stability(
    params: CompliantLumpedParams, convention: StabilityConvention = "dimensional-correction"
) -> StiffnessBound:
    """Least spring stiffness keeping the elastic inverted pendulum upright.

    `as-written` evaluates 2·m·g·L²/H literally. `dimensional-correction`
    returns 2·m·g·H/L², from k·L²/2 > m·g·H.
    """
    mg = params.mass * params.gravity
    length, height = params.sole_length, params.leg_height
    match convention:
        case "as-written":
            stiffness = 2.0 * mg * length**2 / height
        case "dimensional-correction":
            stiffness = 2.0 * mg * height / length**2
    return StiffnessBound(stiffness=stiffness, convention=convention)


def compliant_support_length(params: CompliantLumpedParams, ankle_limit: float) -> float:
    """Span of COM offsets reachable with |α| ≤ θ_max, capped at the sole length."""
    _require_positive(ankle_limit=ankle_limit)
    reach = params.spring_stiffness * params.sole_length**2 * ankle_limit / params.load
    return min(params.sole_length, reach)
