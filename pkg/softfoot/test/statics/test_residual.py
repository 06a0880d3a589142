"""Tests for softfoot.statics.residual module."""

import math

import numpy as np
import pytest

from softfoot.core.numeric import FloatArray
from softfoot.statics.newton import finite_difference_jacobian
from softfoot.statics.params import FootLoad, SoftFootParams
from softfoot.statics.residual import (
    arch_reaction,
    assemble_residual,
    bidiagonal,
    initial_guess,
    is_degenerate,
    residual_jacobian,
)


def loaded_candidate(params: SoftFootParams) -> FloatArray:
    """A generic non-equilibrium point with bent joints and nonzero forces."""
    q = 0.05 * np.cos(np.arange(params.joints, dtype=np.float64))
    return np.concatenate([q, [6.0, 4.0, 5.0, 2.0]])


class TestAssembleResidual:
    """Tests for assemble_residual."""

    def test_unloaded_rest_is_exact_equilibrium(self) -> None:
        params = SoftFootParams.uniform(e_bar=2.0, beta_pre=0.0)
        residual = assemble_residual(params, FootLoad(0.0), np.zeros(params.unknowns))
        assert residual.shape == (params.unknowns,)
        assert np.all(residual == 0.0)

    def test_default_pretension_loads_arch_joint_at_rest(self) -> None:
        """With β_pre = β̄ the straight unloaded foot is not in equilibrium."""
        params = SoftFootParams.uniform(e_bar=2.0)
        assert params.pretension == params.beta_bar
        residual = assemble_residual(params, FootLoad(0.0), np.zeros(params.unknowns))
        assert residual[0] != 0.0
        assert np.all(residual[params.joints :] == 0.0)

    def test_wrong_size_rejected(self) -> None:
        params = SoftFootParams.uniform(e_bar=2.0)
        with pytest.raises(ValueError, match="n \\+ 7"):
            assemble_residual(params, FootLoad(1.0), np.zeros(params.unknowns - 1))

    def test_degenerate_geometry_rejected(self) -> None:
        params = SoftFootParams.uniform(e_bar=2.0, alpha_bar=math.pi / 2, beta_bar=math.pi / 2)
        assert is_degenerate(params)
        with pytest.raises(ValueError, match="degenerate arch geometry"):
            assemble_residual(params, FootLoad(1.0), np.zeros(params.unknowns))

    def test_whole_foot_rows(self) -> None:
        """Rows N and N+1 are the vertical and moment balance of the foot."""
        params = SoftFootParams.uniform(e_bar=2.0)
        load = FootLoad(20.0)
        x = loaded_candidate(params)
        residual = assemble_residual(params, load, x)
        n_joints = params.joints
        q = x[:n_joints]
        assert residual[n_joints] == pytest.approx(20.0 - 15.0)
        expected_moment = (
            20.0 * params.load_arm - params.mid_contact * 4.0 - params.tip_contact(q) * 5.0
        )
        assert residual[n_joints + 1] == pytest.approx(expected_moment)

    def test_constraint_rows(self) -> None:
        params = SoftFootParams.uniform(e_bar=2.0, sigma=1e-4, delta=0.002)
        x = loaded_candidate(params)
        residual = assemble_residual(params, FootLoad(5.0), x)
        q = x[: params.joints]
        ground = params.link_length * np.sum(np.sin(np.cumsum(q))) - 0.002
        tendon = params.radii() @ q - 1e-4
        assert residual[-2] == pytest.approx(ground, abs=1e-15)
        assert residual[-1] == pytest.approx(tendon, abs=1e-15)

    @pytest.mark.parametrize("joint", [0, 3, 6, 7, 8])
    def test_joint_perturbation_sparsity(self, joint: int) -> None:
        """q_j only reaches joint rows i ≥ j − 1, the ground and tendon rows and,
        for the toe joints n and n + 1, the whole-foot moment row."""
        params = SoftFootParams.uniform(e_bar=2.0)
        load = FootLoad(10.0)
        x = loaded_candidate(params)
        shifted = x.copy()
        shifted[joint] += 1e-3
        changed = assemble_residual(params, load, shifted) != assemble_residual(params, load, x)

        n_joints = params.joints
        assert not np.any(changed[: max(joint - 1, 0)])
        assert changed[joint]
        assert not changed[n_joints]
        assert changed[n_joints + 1] == (joint in (params.n, params.n + 1))
        assert changed[n_joints + 2]
        assert changed[n_joints + 3]


class TestResidualJacobian:
    """Tests for the analytic jacobian."""

    def test_matches_finite_differences(self) -> None:
        params = SoftFootParams.uniform(e_bar=2.0, beta_pre=0.05)
        load = FootLoad(12.0)
        x = loaded_candidate(params)

        analytic = residual_jacobian(params, load, x)
        numeric = finite_difference_jacobian(
            lambda v: assemble_residual(params, load, v), x, step=1e-7
        )
        np.testing.assert_allclose(analytic, numeric, rtol=1e-5, atol=1e-6)

    def test_forward_difference_error_is_first_order(self) -> None:
        """Doubling the step doubles the finite-difference error (ratio 2 ± 0.2)."""
        params = SoftFootParams.uniform(e_bar=2.0)
        load = FootLoad(12.0)
        x = loaded_candidate(params)
        analytic = residual_jacobian(params, load, x)[:, 0]

        def column(step: float) -> FloatArray:
            return finite_difference_jacobian(
                lambda v: assemble_residual(params, load, v), x, step=step
            )[:, 0]

        error_h = np.linalg.norm(column(1e-4) - analytic)
        error_2h = np.linalg.norm(column(2e-4) - analytic)
        assert error_2h / error_h == pytest.approx(2.0, abs=0.2)


class TestHelpers:
    """Tests for the arch reaction, M_m and the starting point."""

    def test_bidiagonal(self) -> None:
        expected = np.array([[1.0, -1.0, 0.0], [0.0, 1.0, -1.0], [0.0, 0.0, 1.0]])
        assert np.array_equal(bidiagonal(3), expected)

    def test_arch_reaction_with_pretension(self) -> None:
        params = SoftFootParams.uniform(e_bar=2.0, beta_pre=0.1)
        expected = (10.0 * params.load_arm + 2.0 * 0.1) / params.arch_sine
        assert arch_reaction(params, FootLoad(10.0)) == pytest.approx(expected)

    def test_initial_guess_lever_split(self) -> None:
        params = SoftFootParams.uniform(e_bar=2.0)
        x = initial_guess(params, FootLoad(10.0))
        n_joints = params.joints
        assert np.all(x[:n_joints] == 0.0)
        f1, f2, f3, tension = x[n_joints:]
        assert f2 == 0.0
        assert tension == 0.0
        assert f1 + f3 == pytest.approx(10.0)
        assert f3 * params.tip_contact() == pytest.approx(10.0 * params.load_arm)
