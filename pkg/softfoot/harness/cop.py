"""Center of pressure of sagittal point contacts."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from softfoot.contact.wrench import point_contact_region, resultant_of_field, zmp_on_plane
from softfoot.core.numeric import FloatArray
from softfoot.core.result import Err, Ok, Result
from softfoot.harness.errors import HarnessError

__all__ = ["cop_from_forces", "zmp_of_contacts"]


def cop_from_forces(
    forces: Sequence[float] | FloatArray,
    positions: Sequence[float] | FloatArray,
) -> Result[float, HarnessError]:
    """Σ F_i·x_i / Σ F_i over contacts on the flat base [m]."""
    values = np.asarray(forces, dtype=np.float64).reshape(-1)
    xs = np.asarray(positions, dtype=np.float64).reshape(-1)
    if values.shape != xs.shape:
        raise ValueError(f"{values.shape[0]} forces for {xs.shape[0]} positions")
    total = float(values.sum())
    if not total > 0.0:
        return Err(
            HarnessError(
                kind="zero_total_force",
                message=f"center of pressure needs a positive total force (got {total})",
            )
        )
    return Ok(float(values @ xs) / total)


def zmp_of_contacts(
    forces: Sequence[float] | FloatArray,
    positions: Sequence[float] | FloatArray,
) -> float | None:
    """ZMP abscissa of the same contacts, through the contact resultant wrench."""
    region = point_contact_region(forces, positions)
    match resultant_of_field(region):
        case Ok(wrench):
            zmp = zmp_on_plane(wrench, region.plane)
            return None if zmp is None else zmp[0]
        case Err():
            return None
