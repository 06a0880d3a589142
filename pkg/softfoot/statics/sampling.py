"""Seeded random draws of admissible feet for randomized checks."""

from __future__ import annotations

import numpy as np

from softfoot.statics.params import FootLoad, SoftFootParams

__all__ = ["random_params", "random_load"]


def random_params(rng: np.random.Generator, n: int) -> SoftFootParams:
    """Admissible foot with `n` arch links and moderately spread stiffnesses.

    Geometry stays within a factor of two of the nominal foot so the drawn
    systems remain well conditioned.
    """
    link_length = float(rng.uniform(0.01, 0.03))
    arch_a = float(rng.uniform(0.03, 0.06))
    arch_b = float(rng.uniform(0.05, 0.10))
    alpha_bar = float(rng.uniform(0.3, 0.7))
    beta_bar = float(rng.uniform(0.8, 1.2))
    e_bar = float(rng.uniform(0.5, 5.0))
    stiffness = e_bar * rng.uniform(0.5, 2.0, size=n + 2)
    radii = rng.uniform(1e-3, 2e-3, size=n + 3)
    mid = arch_b * np.cos(beta_bar) + arch_a * np.cos(alpha_bar)
    return SoftFootParams(
        n=n,
        link_length=link_length,
        arch_a=arch_a,
        arch_b=arch_b,
        alpha_bar=alpha_bar,
        beta_bar=beta_bar,
        e0=e_bar * float(rng.uniform(0.5, 2.0)),
        joint_stiffness=tuple(float(e) for e in stiffness),
        pulley_radii=tuple(float(r) for r in radii),
        sigma=float(rng.uniform(-1e-4, 1e-4)),
        delta=float(rng.uniform(-0.2, 0.2)) * link_length,
        beta_pre=float(rng.uniform(0.0, 0.1)),
        load_arm=float(rng.uniform(0.0, mid)),
    )


def random_load(rng: np.random.Generator, max_force: float = 30.0) -> FootLoad:
    return FootLoad(float(rng.uniform(0.0, max_force)))
