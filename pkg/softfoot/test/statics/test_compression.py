"""Tests for softfoot.statics.compression and softfoot.statics.nominal modules."""

import numpy as np
import pytest

from softfoot.core.result import Err, Ok
from softfoot.statics.compression import (
    calibrate_stiffness,
    compression,
    compression_fraction,
    compression_width,
    nonlinear_compression,
    with_uniform_stiffness,
)
from softfoot.statics.nominal import (
    TARGET_FRACTION,
    TARGET_MASS_KG,
    nominal_e_bar,
    nominal_load,
    nominal_params,
)
from softfoot.statics.params import FootLoad, SoftFootParams


class TestCompressionMeasures:
    """Tests for the quadratic and exact load-point descent."""

    def test_zero_configuration(self) -> None:
        params = nominal_params()
        q = np.zeros(params.joints)
        assert compression(params, q) == 0.0
        assert nonlinear_compression(params, q) == 0.0

    def test_quadratic_form_is_second_order_expansion(self) -> None:
        params = nominal_params()
        q = np.zeros(params.joints)
        q[: params.n + 1] = -0.005
        exact = nonlinear_compression(params, q)
        assert exact > 0.0
        assert compression(params, q) == pytest.approx(exact, rel=1e-3)

    def test_width_is_positive_and_stiffness_free(self) -> None:
        soft = compression_width(SoftFootParams.uniform(e_bar=1.0, beta_pre=0.0))
        stiff = compression_width(SoftFootParams.uniform(e_bar=100.0, e0=3.0, beta_pre=0.0))
        assert isinstance(soft, Ok)
        assert isinstance(stiff, Ok)
        assert soft.value > 0.0
        assert stiff.value == pytest.approx(soft.value, rel=1e-9)

    def test_pretensioned_width_depends_on_stiffness_ratio_only(self) -> None:
        soft = compression_width(SoftFootParams.uniform(e_bar=1.0))
        stiff = compression_width(SoftFootParams.uniform(e_bar=100.0))
        uneven = compression_width(SoftFootParams.uniform(e_bar=1.0, e0=4.0))
        assert isinstance(soft, Ok)
        assert isinstance(stiff, Ok)
        assert isinstance(uneven, Ok)
        assert stiff.value == pytest.approx(soft.value, rel=1e-9)
        assert uneven.value != pytest.approx(soft.value, rel=1e-6)

    def test_fraction_grows_with_load(self) -> None:
        params = nominal_params()
        fractions: list[float] = []
        for mass in (0.0, 5.0, 15.0, 25.0, 40.0, 60.0):
            result = compression_fraction(params, FootLoad.from_mass(mass))
            assert isinstance(result, Ok)
            fractions.append(result.value)
        assert fractions[0] == 0.0
        assert all(b > a for a, b in zip(fractions, fractions[1:], strict=False))
        assert fractions[-1] < 1.0

    def test_nonlinear_fraction_at_nominal_load(self) -> None:
        params = nominal_params(beta_pre=0.0)
        closed = compression_fraction(params, nominal_load())
        exact = compression_fraction(params, nominal_load(), method="nonlinear")
        assert isinstance(closed, Ok)
        assert isinstance(exact, Ok)
        assert exact.value == pytest.approx(closed.value, rel=0.1)


class TestCalibration:
    """Tests for calibrate_stiffness and the nominal foot."""

    def test_nominal_foot_is_half_compressed_at_target(self) -> None:
        fraction = compression_fraction(nominal_params(), FootLoad.from_mass(TARGET_MASS_KG))
        assert isinstance(fraction, Ok)
        assert fraction.value == pytest.approx(TARGET_FRACTION, abs=1e-6)
        assert 0.4 <= fraction.value <= 0.6

    def test_exact_descent_at_target_uses_solved_rest_state(self) -> None:
        """The exact measure starts from the solved 0 kg state of the pretensioned foot."""
        params = nominal_params()
        target = FootLoad.from_mass(TARGET_MASS_KG)
        exact = compression_fraction(params, target, method="nonlinear")
        assert isinstance(exact, Ok)
        assert 0.0 < exact.value < 1.0
        rest = compression_fraction(params, FootLoad(0.0), method="nonlinear")
        assert isinstance(rest, Ok)
        assert rest.value == 0.0

    def test_unpretensioned_foot_calibrates_to_its_own_stiffness(self) -> None:
        params = nominal_params(beta_pre=0.0)
        assert params.e0 == nominal_e_bar(0.0)
        fraction = compression_fraction(params, FootLoad.from_mass(TARGET_MASS_KG))
        assert isinstance(fraction, Ok)
        assert fraction.value == pytest.approx(TARGET_FRACTION, abs=1e-6)

    def test_calibration_respects_fixed_e0(self) -> None:
        template = SoftFootParams.uniform(e_bar=1.0, beta_pre=0.0)
        target = FootLoad.from_mass(10.0)
        result = calibrate_stiffness(template, target, 0.3, e0=5.0)
        assert isinstance(result, Ok)
        calibrated = with_uniform_stiffness(template, result.value, e0=5.0)
        assert calibrated.e0 == 5.0
        fraction = compression_fraction(calibrated, target)
        assert isinstance(fraction, Ok)
        assert fraction.value == pytest.approx(0.3, abs=1e-6)

    def test_unloaded_target_has_no_bracket(self) -> None:
        result = calibrate_stiffness(SoftFootParams.uniform(e_bar=1.0), FootLoad(0.0))
        assert isinstance(result, Err)
        assert result.error.kind == "no_bracket"

    def test_rejects_fraction_outside_unit_interval(self) -> None:
        with pytest.raises(ValueError, match="target fraction"):
            calibrate_stiffness(SoftFootParams.uniform(e_bar=1.0), FootLoad(10.0), 1.5)

    def test_nominal_params_use_calibrated_stiffness(self) -> None:
        params = nominal_params()
        assert params.e0 == nominal_e_bar()
        assert params.joint_stiffness == (nominal_e_bar(),) * (params.n + 2)
        assert nominal_params(e_bar=3.0, e0=4.0).e0 == 4.0
