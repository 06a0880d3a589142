"""Value types of the contact-geometry module.

Positions inside a contact region are plane coordinates (u, v) along the
tangent basis (t1, t2) of the region's plane. Tractions are given as
(P_x, P_y, P_z): P_x along the plane normal, P_y and P_z along t1 and t2.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

import numpy as np

from softfoot.core.numeric import FloatArray, as_vector

__all__ = [
    "GEOMETRY_TOL",
    "Vector2",
    "Plane",
    "TractionSample",
    "ContactRegion",
    "HullKind",
    "ConvexHullPolygon",
    "ResultantWrench",
    "ContactCentroid",
    "ContactErrorKind",
    "ContactError",
]

GEOMETRY_TOL = 1e-12

Vector2 = tuple[float, float]


@dataclass(frozen=True, slots=True, eq=False)
class Plane:
    """Oriented plane with a right-handed tangent basis (t1, t2, normal)."""

    origin: FloatArray
    normal: FloatArray

    def __post_init__(self) -> None:
        if self.origin.shape != (3,) or self.normal.shape != (3,):
            raise ValueError("plane origin and normal must be 3-vectors")
        if abs(float(np.linalg.norm(self.normal)) - 1.0) > GEOMETRY_TOL:
            raise ValueError("plane normal must be a unit vector")

    @classmethod
    def through(
        cls,
        origin: Sequence[float] | FloatArray = (0.0, 0.0, 0.0),
        normal: Sequence[float] | FloatArray = (0.0, 0.0, 1.0),
    ) -> Plane:
        """Plane through `origin`; `normal` is normalized."""
        n = as_vector(normal, 3)
        length = float(np.linalg.norm(n))
        if length == 0.0 or not math.isfinite(length):
            raise ValueError("plane normal must be nonzero")
        return cls(origin=as_vector(origin, 3), normal=n / length)

    def basis(self) -> tuple[FloatArray, FloatArray, FloatArray]:
        """(t1, t2, n): t1 from x̂ (ŷ when the normal is close to x̂), t2 = n × t1."""
        helper = np.array([1.0, 0.0, 0.0])
        if abs(float(self.normal @ helper)) > 0.9:
            helper = np.array([0.0, 1.0, 0.0])
        t1 = helper - float(helper @ self.normal) * self.normal
        t1 /= np.linalg.norm(t1)
        t2 = np.cross(self.normal, t1)
        return t1, t2, self.normal

    def embed(self, position: Vector2) -> FloatArray:
        """World point of plane coordinates (u, v)."""
        t1, t2, _ = self.basis()
        return self.origin + position[0] * t1 + position[1] * t2

    def coordinates(self, point: FloatArray) -> Vector2:
        """Plane coordinates of the projection of a world point."""
        t1, t2, _ = self.basis()
        offset = point - self.origin
        return (float(offset @ t1), float(offset @ t2))

    def world_vector(self, components: Sequence[float]) -> FloatArray:
        """Map (normal, t1, t2) components to a world vector."""
        t1, t2, n = self.basis()
        return components[0] * n + components[1] * t1 + components[2] * t2


@dataclass(frozen=True, slots=True)
class TractionSample:
    """One quadrature point of a traction field.

    Attributes:
        position: (u, v) in the contact plane [m].
        traction: (P_x, P_y, P_z) [N/m²].
        area_weight: quadrature area [m²].
    """

    position: Vector2
    traction: tuple[float, float, float]
    area_weight: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.area_weight) and self.area_weight > 0.0):
            raise ValueError(f"area_weight must be > 0 (got {self.area_weight})")
        if not all(math.isfinite(x) for x in (*self.position, *self.traction)):
            raise ValueError("traction sample must be finite")

    @property
    def normal_force(self) -> float:
        return self.traction[0] * self.area_weight


@dataclass(frozen=True, slots=True, eq=False)
class ContactRegion:
    """Discrete traction field over a planar contact region."""

    samples: tuple[TractionSample, ...]
    plane: Plane

    @property
    def is_compressive(self) -> bool:
        """True when every sample pushes into the surface (P_x ≥ 0)."""
        return all(sample.traction[0] >= 0.0 for sample in self.samples)

    def positions(self) -> FloatArray:
        """(k, 2) plane coordinates of the samples."""
        return np.array([s.position for s in self.samples], dtype=np.float64).reshape(-1, 2)

    def forces(self) -> FloatArray:
        """(k, 3) sample forces (traction·area) in (normal, t1, t2) components."""
        return np.array(
            [np.asarray(s.traction) * s.area_weight for s in self.samples], dtype=np.float64
        ).reshape(-1, 3)


HullKind = Literal["polygon", "segment", "point"]


@dataclass(frozen=True, slots=True, eq=False)
class ConvexHullPolygon:
    """Convex hull of planar points.

    Polygon vertices are counterclockwise and start at the lexicographically
    smallest vertex; a segment holds its two extremes, a point one vertex.
    """

    vertices: FloatArray
    kind: HullKind

    @property
    def is_degenerate(self) -> bool:
        return self.kind != "polygon"

    @property
    def area(self) -> float:
        if self.kind != "polygon":
            return 0.0
        x, y = self.vertices[:, 0], self.vertices[:, 1]
        return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))

    def same_as(self, other: ConvexHullPolygon) -> bool:
        return self.kind == other.kind and np.array_equal(self.vertices, other.vertices)


@dataclass(frozen=True, slots=True, eq=False)
class ResultantWrench:
    """Force and moment of a force system about `reference_point` [N, N·m, m]."""

    force: FloatArray
    moment: FloatArray
    reference_point: FloatArray

    def about(self, point: Sequence[float] | FloatArray) -> ResultantWrench:
        """Same system about another point: M' = M + (p − p') × F."""
        target = as_vector(point, 3)
        moment = self.moment + np.cross(self.reference_point - target, self.force)
        return ResultantWrench(force=self.force.copy(), moment=moment, reference_point=target)


@dataclass(frozen=True, slots=True, eq=False)
class ContactCentroid:
    """Point where a compressive field reduces to a force plus a normal moment.

    Attributes:
        point: (u, v) of the centroid [m].
        normal_force: total force along the plane normal [N].
        normal_moment: moment along the plane normal about the centroid [N·m].
        force: total force, world frame [N].
        plane: plane of the region.
    """

    point: Vector2
    normal_force: float
    normal_moment: float
    force: FloatArray
    plane: Plane

    def equivalent_wrench(self, reference: Sequence[float] | FloatArray) -> ResultantWrench:
        """Resultant of (force at the centroid, normal moment) about `reference`."""
        at_centroid = ResultantWrench(
            force=self.force.copy(),
            moment=self.normal_moment * self.plane.normal,
            reference_point=self.plane.embed(self.point),
        )
        return at_centroid.about(reference)


ContactErrorKind = Literal["empty_region", "non_compressive", "empty_input"]


@dataclass(frozen=True, slots=True)
class ContactError:
    kind: ContactErrorKind
    message: str
    hint: str | None = None
