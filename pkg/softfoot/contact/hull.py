"""Convex hulls of contact points and the ZMP containment test."""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from softfoot.contact.types import (
    GEOMETRY_TOL,
    ContactError,
    ConvexHullPolygon,
    Vector2,
)
from softfoot.core.numeric import FloatArray
from softfoot.core.result import Err, Ok, Result

__all__ = ["convex_hull", "stability_test", "hull_margin", "edge_margins", "deduplicate"]


def deduplicate(points: FloatArray, tol: float = GEOMETRY_TOL) -> FloatArray:
    """Drop points within `tol` of an earlier kept point, in lexicographic order."""
    order = np.lexsort((points[:, 1], points[:, 0]))
    kept: list[FloatArray] = []
    for point in points[order]:
        if kept and float(np.min(np.linalg.norm(np.asarray(kept) - point, axis=1))) <= tol:
            continue
        kept.append(point)
    return np.asarray(kept, dtype=np.float64).reshape(-1, 2)


def _cross(o: FloatArray, a: FloatArray, b: FloatArray) -> float:
    return float((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]))


def _segment(points: FloatArray) -> ConvexHullPolygon | None:
    """The two extremes when every point lies within tolerance of one line."""
    start = points[0]
    far = points[int(np.argmax(np.linalg.norm(points - start, axis=1)))]
    direction = far - start
    offsets = points - start
    cross = offsets[:, 0] * direction[1] - offsets[:, 1] * direction[0]
    if float(np.max(np.abs(cross))) > GEOMETRY_TOL * float(np.linalg.norm(direction)):
        return None
    return _widest_pair(points)


def _drop_collinear(vertices: FloatArray) -> FloatArray:
    """Remove vertices whose distance to the chord of their neighbours is within tolerance."""
    current = vertices
    changed = True
    while changed and current.shape[0] > 3:
        changed = False
        count = current.shape[0]
        for i in range(count):
            prev, here, nxt = current[i - 1], current[i], current[(i + 1) % count]
            chord = float(np.linalg.norm(nxt - prev))
            if chord > 0.0 and abs(_cross(prev, here, nxt)) / chord <= GEOMETRY_TOL:
                current = np.delete(current, i, axis=0)
                changed = True
                break
    return current


def convex_hull(points: Sequence[Vector2] | FloatArray) -> Result[ConvexHullPolygon, ContactError]:
    """Smallest convex polygon containing `points`.

    Points closer than 1e-12 m are merged. One distinct point gives a
    `point` hull and collinear points a `segment`; neither is an error.
    """
    array = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    if array.shape[0] == 0:
        return Err(ContactError(kind="empty_input", message="convex hull of no points"))
    if not np.all(np.isfinite(array)):
        raise ValueError("contact points must be finite")

    unique = deduplicate(array)
    if unique.shape[0] == 1:
        return Ok(ConvexHullPolygon(vertices=unique, kind="point"))
    segment = _segment(unique)
    if segment is not None:
        return Ok(segment)

    try:
        hull = ConvexHull(unique)
    except QhullError:
        # Flat beyond what qhull resolves but outside the collinearity tolerance.
        return Ok(_widest_pair(unique))
    vertices = _drop_collinear(unique[hull.vertices])
    if vertices.shape[0] < 3:
        return Ok(_widest_pair(unique))
    start = int(np.lexsort((vertices[:, 1], vertices[:, 0]))[0])
    return Ok(ConvexHullPolygon(vertices=np.roll(vertices, -start, axis=0), kind="polygon"))


def _widest_pair(points: FloatArray) -> ConvexHullPolygon:
    start = points[0]
    far = points[int(np.argmax(np.linalg.norm(points - start, axis=1)))]
    direction = far - start
    along = (points - start) @ direction
    ends = np.array([points[int(np.argmin(along))], points[int(np.argmax(along))]])
    return ConvexHullPolygon(vertices=ends[np.lexsort((ends[:, 1], ends[:, 0]))], kind="segment")


def edge_margins(hull: ConvexHullPolygon, point: Vector2 | FloatArray) -> FloatArray:
    """Signed distance of `point` to every edge line of a polygon hull, positive inside."""
    p = np.asarray(point, dtype=np.float64)
    start = hull.vertices
    end = np.roll(hull.vertices, -1, axis=0)
    edges = end - start
    offsets = p - start
    cross = edges[:, 0] * offsets[:, 1] - edges[:, 1] * offsets[:, 0]
    return cross / np.linalg.norm(edges, axis=1)


def _distance_to_segment(p: FloatArray, a: FloatArray, b: FloatArray) -> float:
    direction = b - a
    length_sq = float(direction @ direction)
    t = 0.0 if length_sq == 0.0 else min(1.0, max(0.0, float((p - a) @ direction) / length_sq))
    return float(np.linalg.norm(p - (a + t * direction)))


def stability_test(zmp: Vector2 | FloatArray | None, hull: ConvexHullPolygon) -> bool:
    """True when the ZMP exists and lies in the closed hull (1e-12 m boundary tolerance)."""
    if zmp is None:
        return False
    p = np.asarray(zmp, dtype=np.float64)
    match hull.kind:
        case "polygon":
            return bool(np.all(edge_margins(hull, p) >= -GEOMETRY_TOL))
        case "segment":
            return _distance_to_segment(p, hull.vertices[0], hull.vertices[1]) <= GEOMETRY_TOL
        case "point":
            return float(np.linalg.norm(p - hull.vertices[0])) <= GEOMETRY_TOL


def hull_margin(point: Vector2 | FloatArray | None, hull: ConvexHullPolygon) -> float:
    """Signed clearance of `point` inside the hull [m], negative outside.

    A segment is measured along its own line; a point hull gives minus the
    distance to its vertex. −inf when there is no point.
    """
    if point is None:
        return -math.inf
    p = np.asarray(point, dtype=np.float64)
    match hull.kind:
        case "polygon":
            return float(np.min(edge_margins(hull, p)))
        case "segment":
            a, b = hull.vertices[0], hull.vertices[1]
            off = _distance_to_segment(p, a, b)
            if off > GEOMETRY_TOL:
                return -off
            direction = b - a
            length = float(np.linalg.norm(direction))
            along = float((p - a) @ direction) / length
            return min(along, length - along)
        case "point":
            return -float(np.linalg.norm(p - hull.vertices[0]))
