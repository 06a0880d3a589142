"""Tests for softfoot.planar.compliant module."""

import dataclasses

import pytest

from softfoot.planar.compliant import (
    CompliantLumpedParams,
    compliant_support_length,
    compliant_tilt_angle,
    k_min_stability,
    k_min_support,
)

THETA_MAX = 0.3


@pytest.fixture
def params() -> CompliantLumpedParams:
    return CompliantLumpedParams(
        spring_stiffness=1000.0, sole_length=0.2, load=15.0, mass=50.0, leg_height=1.0
    )


def _covers_sole(params: CompliantLumpedParams, stiffness: float) -> bool:
    """COM at either sole end reached with the ankle inside its limit."""
    foot = dataclasses.replace(params, spring_stiffness=stiffness)
    return compliant_tilt_angle(foot, foot.sole_length / 2.0) <= THETA_MAX


class TestCompliantTiltAngle:
    """Tests for compliant_tilt_angle."""

    def test_centered_com(self, params: CompliantLumpedParams) -> None:
        assert compliant_tilt_angle(params, 0.0) == 0.0

    def test_reference_value(self, params: CompliantLumpedParams) -> None:
        assert compliant_tilt_angle(params, 0.05) == pytest.approx(0.0375)

    def test_matches_two_spring_torque_balance(self, params: CompliantLumpedParams) -> None:
        """Springs at ±L/2 deflect by ∓α·L/2; their moment k·α·L²/2 balances P·x."""
        x = 0.03
        alpha = compliant_tilt_angle(params, x)
        half = params.sole_length / 2.0
        spring_moment = 2.0 * params.spring_stiffness * (alpha * half) * half
        assert spring_moment == pytest.approx(params.load * x)

    def test_scaling_laws(self, params: CompliantLumpedParams) -> None:
        base = compliant_tilt_angle(params, 0.04)
        stiffer = dataclasses.replace(params, spring_stiffness=2000.0)
        heavier = dataclasses.replace(params, load=45.0)
        assert base / compliant_tilt_angle(stiffer, 0.04) == pytest.approx(2.0, rel=1e-15)
        assert compliant_tilt_angle(heavier, 0.04) / base == pytest.approx(3.0, rel=1e-15)
        assert compliant_tilt_angle(params, 0.08) / base == pytest.approx(2.0, rel=1e-15)
        assert compliant_tilt_angle(params, -0.04) == -base

    def test_offset_beyond_half_sole(self, params: CompliantLumpedParams) -> None:
        with pytest.raises(ValueError, match="L/2"):
            compliant_tilt_angle(params, 0.11)


class TestStiffnessBounds:
    """Tests for k_min_support, k_min_stability and compliant_support_length."""

    def test_support_bound_reference_value(self, params: CompliantLumpedParams) -> None:
        k_min = k_min_support(15.0, 0.2, THETA_MAX)
        assert k_min == pytest.approx(250.0)
        foot = dataclasses.replace(params, spring_stiffness=k_min)
        assert compliant_tilt_angle(foot, 0.1) == pytest.approx(THETA_MAX)

    def test_support_bound_limits(self) -> None:
        assert k_min_support(15.0, 0.2, 1e12) < 1e-9
        doubled = k_min_support(30.0, 0.2, THETA_MAX)
        assert doubled == pytest.approx(2.0 * k_min_support(15.0, 0.2, THETA_MAX))

    def test_support_bound_rejects_non_positive(self) -> None:
        with pytest.raises(ValueError, match="ankle_limit"):
            k_min_support(15.0, 0.2, 0.0)

    def test_bound_separates_covering_stiffness(self, params: CompliantLumpedParams) -> None:
        k_min = k_min_support(params.load, params.sole_length, THETA_MAX)
        soft = dataclasses.replace(params, spring_stiffness=0.9 * k_min)
        stiff = dataclasses.replace(params, spring_stiffness=1.1 * k_min)
        assert compliant_support_length(soft, THETA_MAX) < params.sole_length
        assert compliant_support_length(stiff, THETA_MAX) == params.sole_length
        assert not _covers_sole(params, 0.9 * k_min)
        assert _covers_sole(params, 1.1 * k_min)

        low, high = 0.9 * k_min, 1.1 * k_min
        for _ in range(60):
            middle = 0.5 * (low + high)
            if _covers_sole(params, middle):
                high = middle
            else:
                low = middle
        assert high == pytest.approx(k_min, rel=0.02)

    def test_support_length_grows_with_stiffness(self, params: CompliantLumpedParams) -> None:
        lengths = [
            compliant_support_length(dataclasses.replace(params, spring_stiffness=k), THETA_MAX)
            for k in (50.0, 100.0, 200.0, 400.0)
        ]
        assert lengths[:3] == pytest.approx([0.04, 0.08, 0.16])
        assert lengths[3] == 0.2

    def test_stability_conventions(self, params: CompliantLumpedParams) -> None:
        literal = k_min_stability(params, "as-written")
        corrected = k_min_stability(params, "dimensional-correction")
        assert literal.convention == "as-written"
        assert corrected.convention == "dimensional-correction"
        assert literal.stiffness == pytest.approx(39.24)
        assert corrected.stiffness == pytest.approx(24525.0)
        assert k_min_stability(params).convention == "dimensional-correction"

    def test_corrected_bound_balances_gravity_torque(self, params: CompliantLumpedParams) -> None:
        bound = k_min_stability(params, "dimensional-correction").stiffness
        rotational = bound * params.sole_length**2 / 2.0
        assert rotational == pytest.approx(params.mass * params.gravity * params.leg_height)

    def test_stability_vanishes_with_mass(self, params: CompliantLumpedParams) -> None:
        light = dataclasses.replace(params, mass=1e-12)
        assert k_min_stability(light, "as-written").stiffness < 1e-9
        assert k_min_stability(light, "dimensional-correction").stiffness < 1e-6

    def test_params_validation(self) -> None:
        with pytest.raises(ValueError, match="spring_stiffness"):
            CompliantLumpedParams(
                spring_stiffness=0.0, sole_length=0.2, load=15.0, mass=50.0, leg_height=1.0
            )
