"""Resultants, contact centroids and the zero-moment point of contact fields."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from softfoot.contact.types import (
    ContactCentroid,
    ContactError,
    ContactRegion,
    Plane,
    ResultantWrench,
    TractionSample,
    Vector2,
)
from softfoot.core.numeric import FloatArray
from softfoot.core.result import Err, Ok, Result

__all__ = [
    "resultant_of_field",
    "contact_centroid",
    "zmp_on_plane",
    "point_contact_region",
]


def _empty_region() -> ContactError:
    return ContactError(kind="empty_region", message="empty contact region")


def resultant_of_field(region: ContactRegion) -> Result[ResultantWrench, ContactError]:
    """Total force and moment of the field about the plane origin."""
    if not region.samples:
        return Err(_empty_region())
    plane = region.plane
    t1, t2, n = plane.basis()
    local = region.forces()
    forces = np.outer(local[:, 0], n) + np.outer(local[:, 1], t1) + np.outer(local[:, 2], t2)
    positions = region.positions()
    arms = np.outer(positions[:, 0], t1) + np.outer(positions[:, 1], t2)
    return Ok(
        ResultantWrench(
            force=forces.sum(axis=0),
            moment=np.cross(arms, forces).sum(axis=0),
            reference_point=plane.origin.copy(),
        )
    )


def contact_centroid(region: ContactRegion) -> Result[ContactCentroid, ContactError]:
    """Pressure-weighted centroid of a compressive planar field.

    The field is equivalent to its total force applied at the centroid plus
    a moment τ·n along the plane normal, τ = Σ (Δu·f_t2 − Δv·f_t1).
    """
    if not region.samples:
        return Err(_empty_region())
    local = region.forces()
    normal_force = float(local[:, 0].sum())
    if not region.is_compressive or normal_force <= 0.0:
        return Err(
            ContactError(
                kind="non_compressive",
                message="non-compressive field",
                hint="every sample needs P_x ≥ 0 and the total normal force must be positive",
            )
        )

    positions = region.positions()
    point = (local[:, 0] @ positions) / normal_force
    offsets = positions - point
    normal_moment = float(np.sum(offsets[:, 0] * local[:, 2] - offsets[:, 1] * local[:, 1]))
    totals = local.sum(axis=0)
    return Ok(
        ContactCentroid(
            point=(float(point[0]), float(point[1])),
            normal_force=normal_force,
            normal_moment=normal_moment,
            force=region.plane.world_vector(totals.tolist()),
            plane=region.plane,
        )
    )


def zmp_on_plane(wrench: ResultantWrench, plane: Plane) -> Vector2 | None:
    """Point of `plane` about which the tangential moment vanishes.

    None when the force does not press into the plane (normal component ≤ 0).
    """
    t1, t2, n = plane.basis()
    normal_force = float(wrench.force @ n)
    if normal_force <= 0.0:
        return None
    moment = wrench.about(plane.origin).moment
    return (-float(moment @ t2) / normal_force, float(moment @ t1) / normal_force)


def point_contact_region(
    forces: Sequence[float] | FloatArray,
    positions: Sequence[float] | FloatArray,
) -> ContactRegion:
    """Frictionless point contacts along the sagittal ground line (x̂, normal ẑ).

    Each force becomes a unit-area sample at (x, 0).
    """
    values = np.asarray(forces, dtype=np.float64).reshape(-1)
    xs = np.asarray(positions, dtype=np.float64).reshape(-1)
    if values.shape != xs.shape:
        raise ValueError(f"{values.shape[0]} forces for {xs.shape[0]} positions")
    samples = tuple(
        TractionSample(position=(float(x), 0.0), traction=(float(f), 0.0, 0.0), area_weight=1.0)
        for f, x in zip(values, xs, strict=True)
    )
    return ContactRegion(samples=samples, plane=Plane.through())
