"""Nominal foot: default geometry with ē calibrated to the design target."""

from __future__ import annotations

from functools import lru_cache

from softfoot.core.result import Err
from softfoot.statics.compression import calibrate_stiffness
from softfoot.statics.params import GRAVITY, FootLoad, SoftFootParams

__all__ = [
    "NOMINAL_LOAD_KG",
    "TARGET_MASS_KG",
    "TARGET_FRACTION",
    "nominal_e_bar",
    "nominal_params",
    "nominal_load",
]

NOMINAL_LOAD_KG = 1.5
TARGET_MASS_KG = 25.0
TARGET_FRACTION = 0.5


@lru_cache(maxsize=4)
def nominal_e_bar(beta_pre: float | None = None) -> float:
    """ē that compresses the default foot halfway under 25 kg.

    The arch spring pretension defaults to β̄; pass `beta_pre` to calibrate
    a differently pretensioned foot.

    Raises:
        ValueError: if the default geometry cannot be calibrated.
    """
    template = SoftFootParams.uniform(e_bar=1.0, beta_pre=beta_pre)
    calibrated = calibrate_stiffness(
        template, FootLoad.from_mass(TARGET_MASS_KG, GRAVITY), TARGET_FRACTION
    )
    if isinstance(calibrated, Err):
        raise ValueError(calibrated.error.message)
    return calibrated.value


def nominal_params(
    e_bar: float | None = None, e0: float | None = None, *, beta_pre: float | None = None
) -> SoftFootParams:
    """Default foot with E = ē·I; ē is calibrated when omitted and e0 defaults to ē."""
    return SoftFootParams.uniform(
        e_bar=nominal_e_bar(beta_pre) if e_bar is None else e_bar, e0=e0, beta_pre=beta_pre
    )


def nominal_load() -> FootLoad:
    return FootLoad.from_mass(NOMINAL_LOAD_KG, GRAVITY)
