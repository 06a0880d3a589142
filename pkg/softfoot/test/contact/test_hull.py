"""Tests for softfoot.contact.hull module."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from softfoot.contact.hull import (
    convex_hull,
    deduplicate,
    edge_margins,
    hull_margin,
    stability_test,
)
from softfoot.contact.types import ConvexHullPolygon
from softfoot.core.numeric import FloatArray
from softfoot.core.result import Err, Ok

grid_points = st.lists(
    st.tuples(st.integers(-20, 20), st.integers(-20, 20)).map(
        lambda p: (p[0] / 10.0, p[1] / 10.0)
    ),
    min_size=1,
    max_size=40,
)


def _hull(points: FloatArray | list[tuple[float, float]]) -> ConvexHullPolygon:
    result = convex_hull(points)
    assert isinstance(result, Ok)
    return result.value


def _brute_force_hull_vertices(points: FloatArray) -> set[tuple[float, float]]:
    """Endpoints of every pair with all other points strictly on its left."""
    vertices: set[tuple[float, float]] = set()
    count = points.shape[0]
    for i in range(count):
        edges = points - points[i]
        for j in range(count):
            if i == j:
                continue
            direction = edges[j]
            cross = direction[0] * edges[:, 1] - direction[1] * edges[:, 0]
            cross[[i, j]] = 1.0
            if np.all(cross > 0.0):
                vertices.add((float(points[i, 0]), float(points[i, 1])))
                vertices.add((float(points[j, 0]), float(points[j, 1])))
    return vertices


class TestConvexHull:
    """Tests for convex_hull."""

    def test_square_with_center(self) -> None:
        hull = _hull([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.5, 0.5)])
        assert hull.kind == "polygon"
        assert hull.vertices.tolist() == [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]
        assert hull.area == pytest.approx(1.0)

    def test_collinear_points_give_segment(self) -> None:
        hull = _hull([(0.1, 0.0), (0.0, 0.0), (0.3, 0.0)])
        assert hull.kind == "segment"
        assert hull.is_degenerate
        assert hull.vertices.tolist() == [[0.0, 0.0], [0.3, 0.0]]
        assert hull.area == 0.0

    def test_duplicates_collapse_to_point(self) -> None:
        hull = _hull([(0.2, 0.1), (0.2, 0.1), (0.2 + 1e-13, 0.1)])
        assert hull.kind == "point"
        assert hull.vertices.tolist() == [[0.2, 0.1]]

    def test_edge_midpoints_are_not_vertices(self) -> None:
        hull = _hull([(0.0, 0.0), (0.5, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
        assert hull.vertices.shape == (4, 2)

    def test_empty_input(self) -> None:
        result = convex_hull([])
        assert isinstance(result, Err)
        assert result.error.kind == "empty_input"

    def test_non_finite_input_raises(self) -> None:
        with pytest.raises(ValueError, match="finite"):
            convex_hull([(0.0, 0.0), (float("nan"), 1.0)])

    def test_matches_brute_force_hull(self) -> None:
        rng = np.random.default_rng(7)
        points = rng.uniform(-1.0, 1.0, size=(200, 2))
        hull = _hull(points)
        found = {(float(x), float(y)) for x, y in hull.vertices}
        assert found == _brute_force_hull_vertices(points)
        for point in points:
            assert np.all(edge_margins(hull, point) >= -1e-12)

    def test_vertices_are_counterclockwise(self) -> None:
        rng = np.random.default_rng(11)
        hull = _hull(rng.normal(size=(50, 2)))
        assert hull.area > 0.0
        start = hull.vertices[0]
        assert all(
            (start[0], start[1]) <= (float(v[0]), float(v[1])) for v in hull.vertices
        )

    @settings(max_examples=200, deadline=None)
    @given(grid_points)
    def test_hull_is_idempotent(self, points: list[tuple[float, float]]) -> None:
        hull = _hull(points)
        assert _hull(hull.vertices).same_as(hull)

    @settings(max_examples=200, deadline=None)
    @given(grid_points)
    def test_every_input_point_is_covered(self, points: list[tuple[float, float]]) -> None:
        hull = _hull(points)
        for point in points:
            assert stability_test(point, hull)


class TestDeduplicate:
    """Tests for deduplicate."""

    def test_sorted_and_merged(self) -> None:
        points = np.array([[1.0, 0.0], [0.0, 1.0], [1.0, 0.0], [0.0, 0.5]])
        assert deduplicate(points).tolist() == [[0.0, 0.5], [0.0, 1.0], [1.0, 0.0]]


class TestStabilityTest:
    """Tests for stability_test."""

    def test_centroid_is_stable(self) -> None:
        hull = _hull([(0.0, 0.0), (0.2, 0.0), (0.2, 0.1), (0.0, 0.1)])
        assert stability_test(tuple(hull.vertices.mean(axis=0)), hull)

    def test_outside_bounding_box(self) -> None:
        hull = _hull([(0.0, 0.0), (0.2, 0.0), (0.1, 0.1)])
        assert not stability_test((0.3, 0.05), hull)
        assert not stability_test((0.1, -0.01), hull)

    def test_boundary_counts_as_stable(self) -> None:
        hull = _hull([(0.0, 0.0), (0.2, 0.0), (0.2, 0.1), (0.0, 0.1)])
        assert stability_test((0.2, 0.05), hull)
        assert stability_test((0.0, 0.0), hull)
        assert not stability_test((0.2 + 1e-9, 0.05), hull)

    def test_undefined_zmp_is_unstable(self) -> None:
        hull = _hull([(0.0, 0.0), (0.2, 0.0), (0.1, 0.1)])
        assert not stability_test(None, hull)

    def test_degenerate_hulls(self) -> None:
        segment = _hull([(0.0, 0.0), (0.2, 0.0)])
        assert stability_test((0.1, 0.0), segment)
        assert not stability_test((0.1, 1e-6), segment)
        assert not stability_test((0.3, 0.0), segment)
        point = _hull([(0.1, 0.1)])
        assert stability_test((0.1, 0.1), point)
        assert not stability_test((0.1, 0.1 + 1e-9), point)

    def test_agrees_with_half_plane_oracle(self) -> None:
        rng = np.random.default_rng(2024)
        for _ in range(500):
            hull = _hull(rng.uniform(-1.0, 1.0, size=(int(rng.integers(3, 12)), 2)))
            zmp = rng.uniform(-1.5, 1.5, size=2)
            if hull.kind != "polygon":
                continue
            vertices = hull.vertices.tolist()
            inside = True
            for k, (ax, ay) in enumerate(vertices):
                bx, by = vertices[(k + 1) % len(vertices)]
                if (bx - ax) * (zmp[1] - ay) - (by - ay) * (zmp[0] - ax) < 0.0:
                    inside = False
            assert stability_test((float(zmp[0]), float(zmp[1])), hull) == inside


class TestHullMargin:
    """Signed clearance of a point inside a hull."""

    def test_polygon(self) -> None:
        square = _hull([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
        assert hull_margin((0.25, 0.5), square) == pytest.approx(0.25)
        assert hull_margin((1.5, 0.5), square) == pytest.approx(-0.5)

    def test_segment_measured_along_its_line(self) -> None:
        segment = _hull([(0.0, 0.0), (0.2, 0.0)])
        assert hull_margin((0.05, 0.0), segment) == pytest.approx(0.05)
        assert hull_margin((0.15, 0.0), segment) == pytest.approx(0.05)
        assert hull_margin((0.3, 0.0), segment) == pytest.approx(-0.1)
        assert hull_margin((0.1, 0.01), segment) == pytest.approx(-0.01)

    def test_point_and_undefined(self) -> None:
        point = _hull([(0.1, 0.0)])
        assert hull_margin((0.1, 0.0), point) == 0.0
        assert hull_margin((0.4, 0.0), point) == pytest.approx(-0.3)
        assert hull_margin(None, point) == -math.inf

    def test_sign_matches_stability_test(self) -> None:
        rng = np.random.default_rng(7)
        for _ in range(200):
            hull = _hull(rng.uniform(-1.0, 1.0, size=(6, 2)))
            zmp = (float(rng.uniform(-1.5, 1.5)), float(rng.uniform(-1.5, 1.5)))
            margin = hull_margin(zmp, hull)
            if abs(margin) > 1e-9:
                assert stability_test(zmp, hull) == (margin > 0.0)
