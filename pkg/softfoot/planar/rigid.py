"""Rigid flat sole resting on the ground and one obstacle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from softfoot.core.result import Err, Ok, Result

__all__ = [
    "RigidBranch",
    "RigidFootScenario",
    "RigidPose",
    "PlanarError",
    "rigid_foot_on_obstacle",
]

RigidBranch = Literal["flat", "heel-side", "tip-side"]


@dataclass(frozen=True, slots=True)
class PlanarError:
    kind: Literal["obstacle_too_tall"]
    message: str
    hint: str | None = None


@dataclass(frozen=True, slots=True)
class RigidFootScenario:
    """Sole of length L under a leg of height H, obstacle at sole distance p from the heel.

    Attributes:
        sole_length: L [m].
        leg_height: H [m].
        obstacle_position: p, measured along the sole from the heel [m].
        obstacle_height: h [m].
        ankle_limit: θ_max [rad].
    """

    sole_length: float
    leg_height: float
    obstacle_position: float
    obstacle_height: float
    ankle_limit: float

    def __post_init__(self) -> None:
        values = (
            self.sole_length,
            self.leg_height,
            self.obstacle_position,
            self.obstacle_height,
            self.ankle_limit,
        )
        if not all(math.isfinite(v) for v in values):
            raise ValueError("rigid foot scenario must be finite")
        if self.sole_length <= 0.0 or self.leg_height <= 0.0 or self.ankle_limit <= 0.0:
            raise ValueError("sole_length, leg_height and ankle_limit must be > 0")
        if not 0.0 <= self.obstacle_position <= self.sole_length:
            raise ValueError(
                f"obstacle_position must lie in [0, {self.sole_length}] "
                f"(got {self.obstacle_position})"
            )
        if self.obstacle_height < 0.0:
            raise ValueError(f"obstacle_height must be ≥ 0 (got {self.obstacle_height})")


@dataclass(frozen=True, slots=True)
class RigidPose:
    """One resting pose of the rigid sole.

    Attributes:
        branch: which contact pair carries the foot.
        tilt: α, positive with the tip raised [rad].
        com_displacement: H·sin α [m].
        compensation: ankle rotation restoring a vertical leg, −α [rad].
        support: horizontal projection of the contact pair [m].
        within_ankle_limit: |α| ≤ θ_max.
    """

    branch: RigidBranch
    tilt: float
    com_displacement: float
    compensation: float
    support: tuple[float, float]
    within_ankle_limit: bool

    @property
    def support_length(self) -> float:
        return self.support[1] - self.support[0]


def _pose(
    scenario: RigidFootScenario, branch: RigidBranch, tilt: float, support: tuple[float, float]
) -> RigidPose:
    return RigidPose(
        branch=branch,
        tilt=tilt,
        com_displacement=scenario.leg_height * math.sin(tilt),
        compensation=-tilt,
        support=support,
        within_ankle_limit=abs(tilt) <= scenario.ankle_limit,
    )


def rigid_foot_on_obstacle(
    scenario: RigidFootScenario,
) -> Result[tuple[RigidPose, ...], PlanarError]:
    """Every resting pose of the sole on ground plus obstacle.

    With the heel on the ground the sole tilts by asin(h/p); with the tip on
    the ground by −asin(h/(L − p)). An interior low obstacle admits both.
    """
    length = scenario.sole_length
    p = scenario.obstacle_position
    h = scenario.obstacle_height
    if h == 0.0:
        return Ok((_pose(scenario, "flat", 0.0, (0.0, length)),))

    poses: list[RigidPose] = []
    if h < p:
        tilt = math.asin(h / p)
        poses.append(_pose(scenario, "heel-side", tilt, (0.0, p * math.cos(tilt))))
    if h < length - p:
        tilt = -math.asin(h / (length - p))
        cos_tilt = math.cos(tilt)
        poses.append(_pose(scenario, "tip-side", tilt, (p * cos_tilt, length * cos_tilt)))
    if not poses:
        return Err(
            PlanarError(
                kind="obstacle_too_tall",
                message=f"obstacle too tall: h = {h} m cannot be bridged by the sole",
                hint="the sole must reach the ground from the obstacle (h < p or h < L − p)",
            )
        )
    return Ok(tuple(poses))
