"""Forward kinematics of the foot for drawing and gallery output."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from softfoot.core.numeric import FloatArray, as_vector
from softfoot.statics.params import SoftFootParams

__all__ = ["FootShape", "foot_shape", "arch_points"]


@dataclass(frozen=True, slots=True)
class FootShape:
    """Sole polyline and arch points in the heel frame [m].

    Attributes:
        sole: (n + 4)×2 joint positions, starting at the arch end.
        arch: 3×2 points heel, apex, arch end.
    """

    sole: FloatArray
    arch: FloatArray

    @property
    def endpoint_drop(self) -> float:
        """Height of the sole tip relative to the mid contact."""
        return float(self.sole[-1, 1] - self.sole[0, 1])


def arch_points(params: SoftFootParams) -> FloatArray:
    """Heel, apex and arch end of the rest arch.

    Link b leaves the heel at β̄ and link a descends from the apex at ᾱ, so the
    arch end sits ℓ2 ahead of the heel.
    """
    apex = params.arch_b * np.array([math.cos(params.beta_bar), math.sin(params.beta_bar)])
    end = apex + params.arch_a * np.array([math.cos(params.alpha_bar), -math.sin(params.alpha_bar)])
    return np.vstack([np.zeros(2), apex, end])


def foot_shape(params: SoftFootParams, q: FloatArray) -> FootShape:
    """Joint positions of the sole chain for configuration `q`.

    Segment k points along θ_k = q_0 + … + q_k, so the tip height above the
    mid contact is L·Σ sin θ_k.
    """
    arch = arch_points(params)
    angles = np.cumsum(as_vector(q, params.joints))
    steps = params.link_length * np.column_stack([np.cos(angles), np.sin(angles)])
    sole = np.vstack([arch[-1], arch[-1] + np.cumsum(steps, axis=0)])
    return FootShape(sole=sole, arch=arch)
