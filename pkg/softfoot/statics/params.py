"""Parameter, load and state types of the foot model."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

import numpy as np

from softfoot.core.numeric import FloatArray, as_vector

__all__ = [
    "GRAVITY",
    "SolveMethod",
    "SoftFootParams",
    "FootLoad",
    "EquilibriumState",
]

GRAVITY = 9.81

SolveMethod = Literal["nonlinear", "linear", "closed-form"]


def _positive(name: str, value: float) -> None:
    if not (math.isfinite(value) and value > 0.0):
        raise ValueError(f"{name} must be > 0 (got {value})")


@dataclass(frozen=True, slots=True)
class SoftFootParams:
    """Constructive parameters of the foot, SI units.

    Attributes:
        n: sole links between the arch attachments (chain has n + 3 joints).
        link_length: phalanx length L [m].
        arch_a, arch_b: arch lengths a and b [m].
        alpha_bar, beta_bar: arch angles [rad].
        e0: arch joint stiffness [N·m/rad].
        joint_stiffness: e1..e_{n+2} [N·m/rad].
        pulley_radii: r0..r_{n+2} [m].
        sigma: tendon length offset [m].
        delta: terrain height under the chain tip [m].
        beta_pre: arch spring pretension angle [rad]; None means β̄.
        load_arm: horizontal position x_H of the ankle load [m].
    """

    n: int
    link_length: float
    arch_a: float
    arch_b: float
    alpha_bar: float
    beta_bar: float
    e0: float
    joint_stiffness: tuple[float, ...]
    pulley_radii: tuple[float, ...]
    sigma: float = 0.0
    delta: float = 0.0
    beta_pre: float | None = None
    load_arm: float = 0.08

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n ≥ 1 (got {self.n})")
        for name in ("link_length", "arch_a", "arch_b", "e0"):
            _positive(name, float(getattr(self, name)))
        if len(self.joint_stiffness) != self.n + 2:
            raise ValueError(
                f"joint_stiffness needs n + 2 = {self.n + 2} entries "
                f"(got {len(self.joint_stiffness)})"
            )
        if len(self.pulley_radii) != self.n + 3:
            raise ValueError(
                f"pulley_radii needs n + 3 = {self.n + 3} entries (got {len(self.pulley_radii)})"
            )
        for i, e in enumerate(self.joint_stiffness, start=1):
            _positive(f"e{i}", e)
        for i, r in enumerate(self.pulley_radii):
            _positive(f"r{i}", r)
        for name in ("alpha_bar", "beta_bar", "sigma", "delta", "load_arm"):
            if not math.isfinite(float(getattr(self, name))):
                raise ValueError(f"{name} must be finite")
        if self.beta_pre is not None and not math.isfinite(self.beta_pre):
            raise ValueError("beta_pre must be finite")
        if abs(self.delta) >= self.joints * self.link_length:
            raise ValueError(f"|delta| < (n + 3)·L (got {self.delta})")

    @classmethod
    def uniform(
        cls,
        *,
        e_bar: float,
        n: int = 6,
        link_length: float = 0.02,
        arch_a: float = 0.04,
        arch_b: float = 0.08,
        alpha_bar: float = math.pi / 6,
        beta_bar: float = math.pi / 3,
        e0: float | None = None,
        pulley_radius: float = 0.0015,
        sigma: float = 0.0,
        delta: float = 0.0,
        beta_pre: float | None = None,
        load_arm: float | None = None,
    ) -> SoftFootParams:
        """Foot with E = ē·I, equal pulleys, e0 = ē unless given and x_H = b unless given."""
        return cls(
            n=n,
            link_length=link_length,
            arch_a=arch_a,
            arch_b=arch_b,
            alpha_bar=alpha_bar,
            beta_bar=beta_bar,
            e0=e_bar if e0 is None else e0,
            joint_stiffness=(e_bar,) * (n + 2),
            pulley_radii=(pulley_radius,) * (n + 3),
            sigma=sigma,
            delta=delta,
            beta_pre=beta_pre,
            load_arm=arch_b if load_arm is None else load_arm,
        )

    @property
    def pretension(self) -> float:
        """Arch spring pretension β_pre, β̄ unless set."""
        return self.beta_bar if self.beta_pre is None else self.beta_pre

    @property
    def joints(self) -> int:
        """Number of chain joints, n + 3."""
        return self.n + 3

    @property
    def unknowns(self) -> int:
        """Size of the nonlinear system, n + 7."""
        return self.n + 7

    @property
    def arch_sine(self) -> float:
        """b·sin(ᾱ + β̄), the lever of the arch reaction."""
        return self.arch_b * math.sin(self.alpha_bar + self.beta_bar)

    @property
    def mid_contact(self) -> float:
        """ℓ2: horizontal position of the mid contact from the heel."""
        return self.arch_b * math.cos(self.beta_bar) + self.arch_a * math.cos(self.alpha_bar)

    def tip_contact(self, q: FloatArray | None = None) -> float:
        """ℓ3(q) = ℓ2 + L·(cos q_n + cos(q_n + q_{n+1})); q = 0 when omitted."""
        if q is None:
            return self.mid_contact + 2.0 * self.link_length
        qn, qn1 = float(q[self.n]), float(q[self.n + 1])
        return self.mid_contact + self.link_length * (math.cos(qn) + math.cos(qn + qn1))

    def stiffness(self) -> FloatArray:
        """Diagonal of diag(e0, e1..e_{n+2})."""
        return np.array((self.e0, *self.joint_stiffness), dtype=np.float64)

    def radii(self) -> FloatArray:
        return np.array(self.pulley_radii, dtype=np.float64)

    def arch_mask(self) -> FloatArray:
        """u_i = 1 for joints under the arch reaction (i ≤ n), else 0."""
        mask = np.zeros(self.joints, dtype=np.float64)
        mask[: self.n + 1] = 1.0
        return mask


@dataclass(frozen=True, slots=True)
class FootLoad:
    """Vertical load F_P applied at the ankle [N]."""

    force: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.force) and self.force >= 0.0):
            raise ValueError(f"load must be ≥ 0 (got {self.force})")

    @classmethod
    def from_mass(cls, mass_kg: float, gravity: float = GRAVITY) -> FootLoad:
        return cls(mass_kg * gravity)


@dataclass(frozen=True, slots=True)
class EquilibriumState:
    """Solved configuration and contact forces.

    `residual_norm` is always the max-norm of the nonlinear residual at this
    state, whichever method produced it.
    """

    q: FloatArray
    f1: float
    f2: float
    f3: float
    tension: float
    residual_norm: float
    iterations: int
    method: SolveMethod

    @property
    def forces(self) -> tuple[float, float, float]:
        return (self.f1, self.f2, self.f3)

    def unknowns(self) -> FloatArray:
        """Pack as (q, F1, F2, F3, T)."""
        return np.concatenate([self.q, [self.f1, self.f2, self.f3, self.tension]])

    @classmethod
    def from_unknowns(
        cls,
        x: Sequence[float] | FloatArray,
        *,
        residual_norm: float,
        iterations: int,
        method: SolveMethod,
    ) -> EquilibriumState:
        vector = as_vector(x)
        return cls(
            q=vector[:-4].copy(),
            f1=float(vector[-4]),
            f2=float(vector[-3]),
            f3=float(vector[-2]),
            tension=float(vector[-1]),
            residual_norm=residual_norm,
            iterations=iterations,
            method=method,
        )
