"""
Unit and property tests for the closed-form dark-state theory.
"""
import math
import warnings

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from analytics import (
    Branch,
    alpha_factor,
    branch_for,
    branch_for_detuning,
    check_dark_state_condition,
    control_detuning_for,
    dark_state_4,
    dark_state_5,
    dark_state_at,
    dark_state_series,
    inverse_design,
    mixing_angles,
    null_condition_holds,
    null_condition_residual,
    null_condition_residual_for,
    null_detuning_pair,
    numeric_null_eigenvector,
    population_ratio,
    target_superposition,
)
from analytics.angles import MixingAngles
from diagnostics.jacobi import jacobi_eigenvalues
from model.hamiltonian import build_hamiltonian
from model.system import SystemConfig
from utils.errors import (
    ContractViolation,
    DomainError,
    ParameterInconsistencyWarning,
    PreconditionError,
    SingularInversionError,
    UndefinedAngleError,
)

magnitudes = st.floats(0.1, 10.0)
signs = st.sampled_from([1.0, -1.0])


def matches_up_to_sign(a, b, atol):
    return min(np.max(np.abs(a - b)), np.max(np.abs(a + b))) < atol


def constant_pulse_cfg(omega_p, omega_s, delta, delta_3, omega_c, delta_1=0.0, **extra):
    return SystemConfig(pulse_shape="constant", omega_p_peak=omega_p, omega_s_peak=omega_s,
                        omega_c=omega_c, delta_1=delta_1, delta_2=delta_1 - delta,
                        delta_3=delta_3, **extra)


class TestNullDetuning:
    """Test the null-eigenvalue detunings."""

    def test_resonant_pair(self):
        """Test the fig2 roots."""
        assert null_detuning_pair(0.0, 2.5) == (2.5, -2.5)

    def test_degenerate_pair(self):
        """Test no control field gives the double root 0."""
        assert null_detuning_pair(0.0, 0.0) == (0.0, 0.0)

    def test_detuned_pair(self):
        """Test roots for D3 = 3, Oc = 2 and the eigensolver oracle."""
        plus, minus = null_detuning_pair(3.0, 2.0)
        assert plus == pytest.approx(4.0, rel=1e-15)
        assert minus == pytest.approx(-1.0, rel=1e-15)
        for delta in (plus, minus):
            cfg = SystemConfig(omega_p_peak=0.0, omega_s_peak=0.0, omega_c=2.0,
                               delta_1=delta, delta_3=3.0)
            eigenvalues = jacobi_eigenvalues(build_hamiltonian(cfg, 0.0)[2:, 2:])
            assert np.min(np.abs(eigenvalues)) < 1e-10

    @settings(max_examples=1000, deadline=None)
    @given(delta_3=st.floats(-50.0, 50.0), omega_c=st.floats(0.0, 20.0))
    def test_root_property(self, delta_3, omega_c):
        """Test both roots satisfy the null condition."""
        plus, minus = null_detuning_pair(delta_3, omega_c)
        assert plus >= minus
        scale = max(delta_3 * delta_3 + omega_c * omega_c, 1e-300)
        for delta in (plus, minus):
            assert abs(null_condition_residual(delta, delta_3, omega_c)) <= 1e-12 * scale

    def test_control_detuning_examples(self):
        """Test the inverted null condition."""
        assert control_detuning_for(1.0, 1.5) == -1.25
        assert control_detuning_for(2.5, 2.5) == 0.0
        assert control_detuning_for(10.0, 1.7) == pytest.approx(9.711, rel=1e-12)
        assert null_detuning_pair(-1.25, 1.5)[0] == pytest.approx(1.0, rel=1e-15)

    def test_control_detuning_singular(self):
        """Test delta = 0 cannot be inverted."""
        with pytest.raises(SingularInversionError):
            control_detuning_for(0.0, 1.0)

    def test_branch_for_detuning(self):
        """Test branch selection by the nearest root."""
        assert branch_for_detuning(2.5, 0.0, 2.5) is Branch.PLUS
        assert branch_for_detuning(-2.5, 0.0, 2.5) is Branch.MINUS
        assert Branch.PLUS.sign == 1.0 and Branch.MINUS.sign == -1.0

    def test_null_condition_holds(self):
        """Test the relative precondition check."""
        assert null_condition_holds(2.5, 0.0, 2.5)
        assert null_condition_holds(1.0, control_detuning_for(1.0, 1.5), 1.5)
        assert not null_condition_holds(1.0, 0.0, 2.5)
        assert null_condition_holds(0.0, 0.0, 0.0)


class TestMixingAngles:
    """Test the mixing angles and alpha factor."""

    def test_pump_off(self):
        """Test theta = 0 before the pump arrives."""
        angles = mixing_angles(0.0, 4.0, 2.5, 0.0, 2.5)
        assert angles.theta == 0.0

    def test_fig2_at_crossing(self):
        """Test the fig2 angles at t = 0."""
        omega = 4.0 * math.exp(-0.25)
        angles = mixing_angles(omega, omega, 2.5, 0.0, 2.5)
        assert angles.alpha == pytest.approx(math.sqrt(2.0), rel=1e-15)
        assert angles.theta == pytest.approx(math.atan(math.sqrt(2.0)), rel=1e-14)
        assert angles.theta == pytest.approx(0.9553, abs=1e-4)
        assert angles.phi == pytest.approx(math.pi / 4, rel=1e-15)

    def test_stokes_off(self):
        """Test theta = pi/2 after the Stokes pulse is gone."""
        assert mixing_angles(1.0, 0.0, 2.5, 0.0, 2.5).theta == pytest.approx(math.pi / 2)

    def test_both_pulses_zero(self):
        """Test the angle is undefined without pulses."""
        with pytest.raises(UndefinedAngleError):
            mixing_angles(0.0, 0.0, 2.5, 0.0, 2.5)

    def test_negative_radicand(self):
        """Test a negative alpha radicand is reported with its value."""
        with pytest.raises(DomainError) as exc:
            mixing_angles(1.0, 1.0, 1.0, 1.5, 2.0)
        assert exc.value.value == pytest.approx(-1.0)

    def test_alpha_edge_cases(self):
        """Test alpha when delta equals delta_3."""
        assert alpha_factor(0.0, 0.0) == 1.0
        assert math.isinf(alpha_factor(2.0, 2.0))
        assert mixing_angles(1.0, 1.0, 2.0, 2.0, 1.0).theta == pytest.approx(math.pi / 2)
        assert mixing_angles(1.0, 1.0, 2.0, 2.0, 1.0).phi == pytest.approx(math.pi / 2)

    @settings(max_examples=1000, deadline=None)
    @given(delta=magnitudes, sign=signs, omega_c=magnitudes,
           omega_p=magnitudes, omega_s=magnitudes)
    def test_identities_under_null_condition(self, delta, sign, omega_c, omega_p, omega_s):
        """Test tan(phi) = |D|/Oc and alpha^2 = 1 + D^2/Oc^2."""
        delta *= sign
        delta_3 = control_detuning_for(delta, omega_c)
        angles = mixing_angles(omega_p, omega_s, delta, delta_3, omega_c)
        assert math.tan(angles.phi) == pytest.approx(abs(delta) / omega_c, rel=1e-9)
        assert angles.alpha ** 2 == pytest.approx(1.0 + delta * delta / omega_c ** 2, rel=1e-9)
        assert angles.alpha >= 1.0
        assert 0.0 <= angles.theta <= math.pi / 2
        assert 0.0 <= angles.phi <= math.pi / 2


class TestPopulationRatio:
    """Test the final population ratio."""

    def test_equal_populations(self):
        """Test phi = pi/4 gives R = 1."""
        assert population_ratio(math.pi / 4) == pytest.approx(1.0, rel=1e-15)

    @pytest.mark.parametrize("delta,omega_c,ratio,p_dominant,level", [
        (1.0, 1.5, 2.25, 0.6923, 3),
        (10.0, 1.7, 0.0289, 0.9719, 4),
    ])
    def test_fig3_ratios(self, delta, omega_c, ratio, p_dominant, level):
        """Test the fig3 ratios and the dominant final population."""
        delta_3 = control_detuning_for(delta, omega_c)
        angles = mixing_angles(1.0, 1.0, delta, delta_3, omega_c)
        r = population_ratio(angles.phi)
        assert r == pytest.approx(ratio, rel=1e-9)
        p3 = r / (1.0 + r)
        assert (p3 if level == 3 else 1.0 - p3) == pytest.approx(p_dominant, abs=1e-4)

    def test_infinite_ratio(self):
        """Test sin(phi) = 0 is signalled."""
        with pytest.raises(DomainError) as exc:
            population_ratio(0.0)
        assert math.isinf(exc.value.value)


class TestDarkState4:
    """Test the twofold-manifold dark states."""

    def test_initial_state(self):
        """Test theta = 0 gives |1>."""
        state = dark_state_4(MixingAngles(theta=0.0, phi=0.3, alpha=1.0), Branch.PLUS)
        assert np.array_equal(state.amplitudes, [1.0, 0.0, 0.0, 0.0])

    def test_final_plus_state(self):
        """Test theta = pi/2, phi = pi/4 lands on (|3> + |4>)/sqrt(2)."""
        state = dark_state_4(MixingAngles(theta=math.pi / 2, phi=math.pi / 4, alpha=1.0), Branch.PLUS)
        expected = np.array([0.0, 0.0, -1.0, -1.0]) / math.sqrt(2.0)
        assert np.allclose(state.amplitudes, expected, atol=1e-15)

    def test_branch_antisymmetry(self):
        """Test the branches differ only in the sign on level 4."""
        angles = MixingAngles(theta=0.7, phi=0.4, alpha=1.2)
        plus = dark_state_4(angles, Branch.PLUS).amplitudes
        minus = dark_state_4(angles, Branch.MINUS).amplitudes
        assert np.array_equal(plus[:3], minus[:3])
        assert plus[3] == -minus[3]

    def test_amplitudes_read_only(self):
        """Test dark-state amplitudes cannot be modified."""
        state = dark_state_4(MixingAngles(theta=0.7, phi=0.4, alpha=1.2), Branch.PLUS)
        with pytest.raises(ValueError):
            state.amplitudes[0] = 0.0

    @settings(max_examples=1000, deadline=None)
    @given(delta=magnitudes, sign=signs, omega_c=magnitudes, omega_p=st.floats(0.01, 10.0),
           omega_s=st.floats(0.01, 10.0), delta_1=st.floats(-10.0, 10.0))
    def test_null_vector(self, delta, sign, omega_c, omega_p, omega_s, delta_1):
        """Test H psi = 0, unit norm, no |2> and agreement with the numeric null vector."""
        delta *= sign
        delta_3 = control_detuning_for(delta, omega_c)
        cfg = constant_pulse_cfg(omega_p, omega_s, delta, delta_3, omega_c, delta_1)
        H = build_hamiltonian(cfg, 0.0)
        psi = dark_state_at(cfg, 0.0).amplitudes

        assert psi[1] == 0.0
        assert np.linalg.norm(psi) == pytest.approx(1.0, abs=1e-12)
        assert np.linalg.norm(H @ psi) < 1e-10

        gaps = np.sort(np.abs(np.linalg.eigvalsh(H)))
        assume(gaps[1] > 1e-2 * np.linalg.norm(H))
        numeric = numeric_null_eigenvector(H)
        assert numeric is not None
        assert matches_up_to_sign(psi, numeric, 1e-9)

    def test_null_along_fig2_pulses(self):
        """Test nullity on a 101-point grid through the fig2 pulses."""
        cfg = SystemConfig(omega_p_peak=4.0, omega_s_peak=4.0, omega_c=2.5,
                           delta_1=3.5, delta_2=1.0)
        for t in np.linspace(-20, 20, 101):
            psi = dark_state_at(cfg, t).amplitudes
            assert np.linalg.norm(build_hamiltonian(cfg, t) @ psi) < 1e-10

    def test_orthogonality_at_resonance(self):
        """Test the two resonant end states are orthogonal."""
        plus = target_superposition(math.pi / 4, Branch.PLUS)
        minus = target_superposition(math.pi / 4, Branch.MINUS)
        assert abs(plus @ minus) < 1e-12

    def test_target_superposition(self):
        """Test the end states of both branches."""
        assert np.allclose(target_superposition(math.pi / 4, Branch.PLUS),
                           [1 / math.sqrt(2), 1 / math.sqrt(2)], atol=1e-15)
        for branch in Branch:
            assert np.array_equal(target_superposition(0.0, branch), [1.0, 0.0])
        phi = 0.3
        overlap = target_superposition(phi, Branch.PLUS) @ target_superposition(phi, Branch.MINUS)
        assert overlap == pytest.approx(math.cos(phi) ** 2 - math.sin(phi) ** 2, abs=1e-15)

    def test_normal_lambda_limit(self):
        """Test Omega_c = 0 collapses to cos(theta)|1> - sin(theta)|3>."""
        cfg = SystemConfig(omega_c=0.0, delta_1=1.0, delta_2=1.0)
        assert null_detuning_pair(0.0, 0.0) == (0.0, 0.0)
        state = dark_state_at(cfg, 0.0)
        theta = state.angles.theta
        assert np.allclose(state.amplitudes, [math.cos(theta), 0.0, -math.sin(theta), 0.0],
                           atol=1e-15)

    def test_series_matches_pointwise(self):
        """Test the vectorized dark states."""
        cfg = SystemConfig(omega_p_peak=4.0, omega_s_peak=4.0, omega_c=2.5,
                           delta_1=3.5, delta_2=6.0)
        times = np.linspace(-10, 10, 41)
        series = dark_state_series(cfg, times)
        assert branch_for(cfg) is Branch.MINUS
        for t, row in zip(times, series):
            assert np.allclose(row, dark_state_at(cfg, t).amplitudes, atol=1e-14)

    def test_requires_null_condition(self):
        """Test dark states need the null condition."""
        cfg = SystemConfig(omega_c=2.5, delta_1=1.0)
        with pytest.raises(PreconditionError) as exc:
            dark_state_at(cfg, 0.0)
        assert exc.value.residual == pytest.approx(1.0 - 6.25)


class TestDarkState5:
    """Test the threefold-manifold dark states."""

    def test_strong_pump_limit(self):
        """Test the manifold components approach (3, 5, 4)/sqrt(50)."""
        state = dark_state_5(1e8, 1.0, 3.0, 4.0, 5.0, Branch.PLUS)
        assert state.phi_prime == pytest.approx(0.0, abs=1e-7)
        assert np.allclose(state.amplitudes[2:], -np.array([3.0, 5.0, 4.0]) / math.sqrt(50.0),
                           atol=1e-7)
        minus = dark_state_5(1e8, 1.0, 3.0, 4.0, -5.0, Branch.MINUS)
        assert np.allclose(minus.amplitudes[2:], np.array([-3.0, 5.0, -4.0]) / math.sqrt(50.0),
                           atol=1e-7)

    def test_reduces_to_four_level(self):
        """Test Omega_d = 0, Delta = Omega_c gives the resonant twofold state."""
        omega_p, omega_s = 1.3, 2.1
        five = dark_state_5(omega_p, omega_s, 2.0, 0.0, 2.0, Branch.PLUS).amplitudes
        four = dark_state_4(mixing_angles(omega_p, omega_s, 2.0, 0.0, 2.0), Branch.PLUS).amplitudes
        assert np.allclose(five[:4], four, atol=1e-14)
        assert five[4] == 0.0

    def test_condition_violated(self):
        """Test the precondition carries the manifold residual."""
        with pytest.raises(PreconditionError) as exc:
            dark_state_5(4.0, 4.0, 3.0, 4.0, -1.0, Branch.MINUS)
        assert exc.value.residual == pytest.approx(1.0 - 25.0)

    def test_branch_must_match_sign(self):
        """Test the branch is tied to the sign of delta."""
        with pytest.raises(PreconditionError):
            dark_state_5(4.0, 4.0, 3.0, 4.0, 5.0, Branch.MINUS)

    @settings(max_examples=1000, deadline=None)
    @given(omega_c=magnitudes, omega_d=magnitudes, sign=signs,
           omega_p=st.floats(0.01, 10.0), omega_s=st.floats(0.01, 10.0),
           delta_1=st.floats(-10.0, 10.0))
    def test_null_vector(self, omega_c, omega_d, sign, omega_p, omega_s, delta_1):
        """Test H psi = 0 and agreement with the numeric null vector."""
        delta = sign * math.hypot(omega_c, omega_d)
        cfg = constant_pulse_cfg(omega_p, omega_s, delta, 0.0, omega_c, delta_1,
                                 n_levels=5, omega_d=omega_d)
        H = build_hamiltonian(cfg, 0.0)
        state = dark_state_at(cfg, 0.0)
        psi = state.amplitudes

        assert state.branch.sign == math.copysign(1.0, cfg.delta)
        assert psi[1] == 0.0
        assert np.linalg.norm(psi) == pytest.approx(1.0, abs=1e-12)
        assert np.linalg.norm(H @ psi) < 1e-10

        gaps = np.sort(np.abs(np.linalg.eigvalsh(H)))
        assume(gaps[1] > 1e-2 * np.linalg.norm(H))
        numeric = numeric_null_eigenvector(H)
        assert numeric is not None
        assert matches_up_to_sign(psi, numeric, 1e-9)


class TestNumericNullVector:
    """Test the numeric oracle."""

    def test_zero_matrix(self):
        """Test the zero matrix gives the first basis vector."""
        assert np.array_equal(numeric_null_eigenvector(np.zeros((4, 4))), [1.0, 0.0, 0.0, 0.0])

    def test_fig2_control_block(self):
        """Test the pulses-off null vector lives on levels 3 and 4 with equal weight."""
        cfg = SystemConfig(omega_p_peak=4.0, omega_s_peak=4.0, omega_c=2.5,
                           delta_1=3.5, delta_2=1.0)
        H = build_hamiltonian(cfg, -60.0)
        v = numeric_null_eigenvector(H[2:, 2:])
        assert np.allclose(v, [1 / math.sqrt(2), 1 / math.sqrt(2)], atol=1e-12)

    def test_off_condition(self):
        """Test no null vector when delta is not a root."""
        cfg = SystemConfig(omega_c=2.5, delta_1=1.0)
        H = build_hamiltonian(cfg, -60.0)
        assert numeric_null_eigenvector(H[2:, 2:]) is None

    def test_non_symmetric(self):
        """Test non-symmetric input is a contract violation."""
        with pytest.raises(ContractViolation):
            numeric_null_eigenvector(np.array([[0.0, 1.0], [2.0, 0.0]]))


class TestInverseDesign:
    """Test parameter design for a target population ratio."""

    def test_resonant_design(self):
        """Test R = 1 gives resonant controls."""
        assert inverse_design(1.0, Branch.PLUS, 2.5) == (2.5, 0.0)

    def test_fig3a_design(self):
        """Test R = 2.25 reproduces the completed fig3a detunings."""
        assert inverse_design(2.25, Branch.PLUS, 1.5) == (1.0, -1.25)

    def test_minus_branch(self):
        """Test the minus branch uses the negative root."""
        delta, delta_3 = inverse_design(1.0, Branch.MINUS, 2.5)
        assert delta == -2.5
        assert branch_for_detuning(delta, delta_3, 2.5) is Branch.MINUS

    @pytest.mark.parametrize("ratio,omega_c", [(0.0, 1.0), (-1.0, 1.0), (1.0, 0.0)])
    def test_invalid(self, ratio, omega_c):
        """Test non-positive ratios and control fields."""
        with pytest.raises(DomainError):
            inverse_design(ratio, Branch.PLUS, omega_c)

    @settings(max_examples=1000, deadline=None)
    @given(ratio=st.floats(0.01, 100.0), omega_c=magnitudes, branch=st.sampled_from(list(Branch)))
    def test_round_trip(self, ratio, omega_c, branch):
        """Test designed detunings reproduce the target ratio."""
        delta, delta_3 = inverse_design(ratio, branch, omega_c)
        assert branch_for_detuning(delta, delta_3, omega_c) is branch
        angles = mixing_angles(1.0, 1.0, delta, delta_3, omega_c)
        assert population_ratio(angles.phi) == pytest.approx(ratio, rel=1e-10)


class TestConsistencyCheck:
    """Test the dark-state existence warning."""

    def test_fig5c_listed_values_warn(self):
        """Test the listed fig5c values raise the inconsistency warning."""
        cfg = SystemConfig(n_levels=5, omega_c=3.0, omega_d=4.0,
                           delta_1=4.0, delta_2=5.0, delta_3=-1.0)
        assert null_condition_residual_for(cfg) == pytest.approx(-16.0)
        with pytest.warns(ParameterInconsistencyWarning):
            assert check_dark_state_condition(cfg) is False

    def test_consistent_reading_is_quiet(self):
        """Test the resonant reading passes without a warning."""
        cfg = SystemConfig(n_levels=5, omega_c=3.0, omega_d=4.0, delta_1=4.0, delta_2=-1.0)
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            assert check_dark_state_condition(cfg) is True

    def test_four_level_warning(self):
        """Test a four-level scenario off the null condition warns."""
        with pytest.warns(ParameterInconsistencyWarning):
            assert check_dark_state_condition(SystemConfig(omega_c=2.5, delta_1=1.0)) is False


def run_tests():
    """Run all tests."""
    pytest.main([__file__, "-v"])


if __name__ == "__main__":
    run_tests()
