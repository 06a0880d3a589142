"""Tests for softfoot.harness.maps module."""

import numpy as np
import pytest

from softfoot.core.numeric import FloatArray
from softfoot.harness.maps import ComplianceMap, compliance_map, configuration_gallery
from softfoot.statics.nominal import (
    TARGET_FRACTION,
    TARGET_MASS_KG,
    nominal_e_bar,
    nominal_params,
)


def _grid(count: int, beta_pre: float | None = None) -> FloatArray:
    return nominal_e_bar(beta_pre) * np.geomspace(0.25, 4.0, count)


class TestComplianceMap:
    """Tests for compliance_map."""

    def test_full_grid_is_non_increasing_in_e_bar(self) -> None:
        grid = _grid(20, beta_pre=0.0)
        result = compliance_map(nominal_params(beta_pre=0.0), grid, grid, (0.0, 1.5))
        assert result.values.shape == (2, 20, 20)
        assert not result.diagnostics
        assert np.all(np.isfinite(result.values))
        assert result.non_increasing_in_e_bar()
        assert np.all(result.values[1] > 0.0)

    def test_unloaded_foot_has_no_compliance(self) -> None:
        params = nominal_params(beta_pre=0.0)
        grid = _grid(4, beta_pre=0.0)
        soft = compliance_map(params, grid, grid, (0.0,))
        stiff = compliance_map(params, 2.0 * grid, 2.0 * grid, (0.0,))
        assert np.all(np.abs(soft.values) <= 1e-12)
        assert np.all(np.abs(stiff.values) <= 1e-12)

    def test_pretensioned_unloaded_foot_is_compliant(self) -> None:
        """At 0 kg the pretensioned foot rests bent, so it yields under a small load."""
        e_bar = nominal_e_bar()
        e_bars = e_bar * np.geomspace(0.5, 2.0, 4)
        e0s = e_bar * np.array([0.5, 1.0, 2.0])
        result = compliance_map(nominal_params(), e_bars, e0s, (0.0,))
        assert not result.diagnostics
        assert np.all(np.isfinite(result.values))
        assert np.all(np.abs(result.values) > 1e-9)
        assert result.non_increasing_in_e_bar()

    def test_reordering_the_grid_reorders_the_values(self) -> None:
        grid = _grid(5)
        forward = compliance_map(nominal_params(), grid, grid[:3], (1.5,))
        backward = compliance_map(nominal_params(), grid[::-1], grid[:3], (1.5,))
        np.testing.assert_array_equal(backward.values, forward.values[:, ::-1, :])

    def test_threads_give_identical_values(self) -> None:
        grid = _grid(6)
        sequential = compliance_map(nominal_params(), grid, grid, (0.0, 1.5))
        threaded = compliance_map(nominal_params(), grid, grid, (0.0, 1.5), workers=4)
        np.testing.assert_array_equal(threaded.values, sequential.values)

    def test_rows_order(self) -> None:
        result = compliance_map(nominal_params(), [1.0, 2.0], [3.0], (0.0, 1.5))
        rows = list(result.rows())
        assert len(rows) == 4
        assert [(r[0], r[1], r[2]) for r in rows] == [
            (1.0, 3.0, 0.0),
            (2.0, 3.0, 0.0),
            (1.0, 3.0, 1.5),
            (2.0, 3.0, 1.5),
        ]

    @pytest.mark.parametrize(
        ("e_bars", "e0s", "loads", "match"),
        [
            ([], [1.0], [1.5], "e_bar grid is empty"),
            ([1.0], [0.0], [1.5], "e0 grid values"),
            ([-1.0], [1.0], [1.5], "e_bar grid values"),
            ([1.0], [1.0], [-1.0], "loads"),
            ([1.0], [1.0], [], "loads"),
        ],
    )
    def test_validation(
        self, e_bars: list[float], e0s: list[float], loads: list[float], match: str
    ) -> None:
        with pytest.raises(ValueError, match=match):
            compliance_map(nominal_params(), e_bars, e0s, loads)

    def test_trend_detection(self) -> None:
        values = np.array([[[1.0], [2.0]]])
        increasing = ComplianceMap(
            e_bars=np.array([1.0, 2.0]),
            e0s=np.array([1.0]),
            loads_kg=np.array([1.5]),
            values=values,
        )
        assert not increasing.non_increasing_in_e_bar()
        decreasing = ComplianceMap(
            e_bars=np.array([2.0, 1.0]),
            e0s=np.array([1.0]),
            loads_kg=np.array([1.5]),
            values=values,
        )
        assert decreasing.non_increasing_in_e_bar()

    def test_trend_uses_magnitudes(self) -> None:
        result = ComplianceMap(
            e_bars=np.array([1.0, 2.0, 3.0]),
            e0s=np.array([1.0]),
            loads_kg=np.array([0.0]),
            values=np.array([[[-5e-4], [-2e-4], [-1e-5]]]),
        )
        assert result.non_increasing_in_e_bar()

    def test_missing_cells_are_ignored_by_trend(self) -> None:
        result = ComplianceMap(
            e_bars=np.array([1.0, 2.0, 3.0]),
            e0s=np.array([1.0]),
            loads_kg=np.array([1.5]),
            values=np.array([[[3.0], [np.nan], [1.0]]]),
            diagnostics=("e_bar=2.0 e0=1.0 load=1.5 kg: not converged",),
        )
        assert result.non_increasing_in_e_bar()


class TestConfigurationGallery:
    """Tests for configuration_gallery."""

    LOADS = (0.0, 5.0, 15.0, TARGET_MASS_KG, 40.0, 60.0)

    def test_load_sequence(self) -> None:
        gallery = configuration_gallery(nominal_params(), self.LOADS)
        assert not gallery.failures
        assert [entry.load_kg for entry in gallery.entries] == list(self.LOADS)
        assert gallery.width > 0.0
        assert gallery.compression_monotone
        assert gallery.arch_height_non_increasing
        compressions = [entry.compression for entry in gallery.entries]
        assert all(b > a for a, b in zip(compressions, compressions[1:], strict=False))

    def test_unloaded_entry_is_straight(self) -> None:
        (entry,) = configuration_gallery(nominal_params(beta_pre=0.0), [0.0]).entries
        assert entry.state is not None
        assert entry.shape is not None
        assert entry.compression == pytest.approx(0.0, abs=1e-9)
        assert entry.endpoint_drop == pytest.approx(0.0, abs=1e-9)
        assert np.max(np.abs(entry.state.q)) <= 1e-8

    def test_pretensioned_unloaded_entry_starts_at_zero(self) -> None:
        (entry,) = configuration_gallery(nominal_params(), [0.0]).entries
        assert entry.state is not None
        assert entry.state.q[0] > 0.0
        assert entry.compression == 0.0
        assert entry.exact_fraction == 0.0
        assert entry.compression_fraction == 0.0

    def test_half_compressed_at_design_load(self) -> None:
        gallery = configuration_gallery(nominal_params(), [0.0, 10.0, TARGET_MASS_KG])
        design = gallery.entries[-1]
        assert design.compression_fraction == pytest.approx(TARGET_FRACTION, abs=1e-6)
        assert 0.0 < design.exact_fraction < 1.0
        assert design.exact_fraction == pytest.approx(design.compression / gallery.width)

    def test_endpoint_drop_follows_terrain_offset(self) -> None:
        params = nominal_params()
        gallery = configuration_gallery(params, [1.5, 15.0])
        for entry in gallery.entries:
            assert entry.endpoint_drop == pytest.approx(params.delta, abs=1e-9)

    @pytest.mark.parametrize(
        ("loads", "match"),
        [([5.0, 1.0], "ascending"), ([-1.0, 1.0], "≥ 0"), ([float("inf")], "≥ 0")],
    )
    def test_validation(self, loads: list[float], match: str) -> None:
        with pytest.raises(ValueError, match=match):
            configuration_gallery(nominal_params(), loads)
