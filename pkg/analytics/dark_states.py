"""
Analytic dark states (zero-eigenvalue eigenvectors with no |2> component) of
the twofold and threefold manifold systems, and the superpositions they end in.
"""
from dataclasses import dataclass
from typing import Optional
import logging
import math
import warnings

import numpy as np

from analytics.angles import MixingAngles, alpha_factor, mixing_angles
from analytics.branch import Branch
from analytics.detuning import (
    branch_for_detuning,
    null_condition_holds,
    null_condition_residual,
)
from config import config
from model.hamiltonian import build_hamiltonian
from model.pulses import envelope_value
from model.system import SystemConfig
from utils.errors import ParameterInconsistencyWarning, PreconditionError

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class DarkState:
    """Unit-norm real amplitudes over all levels; amplitudes[1] is exactly 0."""
    amplitudes: np.ndarray
    branch: Branch
    angles: Optional[MixingAngles] = None
    # Threefold system: weight angle of |1>, amplitude on |1> is sin(phi_prime)
    phi_prime: Optional[float] = None

    def __post_init__(self):
        self.amplitudes.setflags(write=False)


def dark_state_4(angles: MixingAngles, branch: Branch) -> DarkState:
    """
    cos(theta)|1> - sin(theta)(cos(phi)|3> +- sin(phi)|4>).

    Args:
        angles: Mixing angles at the time of interest
        branch: plus or minus dark state
    """
    branch = Branch(branch)
    st, ct = math.sin(angles.theta), math.cos(angles.theta)
    amplitudes = np.array([
        ct,
        0.0,
        -st * math.cos(angles.phi),
        -branch.sign * st * math.sin(angles.phi),
    ])
    return DarkState(amplitudes=amplitudes, branch=branch, angles=angles)


def target_superposition(phi: float, branch: Branch) -> np.ndarray:
    """Amplitudes (on |3>, |4>) of cos(phi)|3> +- sin(phi)|4>."""
    return np.array([math.cos(phi), Branch(branch).sign * math.sin(phi)])


def manifold_residual(omega_c: float, omega_d: float, delta: float) -> float:
    """D^2 - Oc^2 - Od^2; zero when the resonant threefold system has dark states."""
    return delta * delta - omega_c * omega_c - omega_d * omega_d


def dark_state_5(omega_p: float, omega_s: float, omega_c: float, omega_d: float,
                 delta: float, branch: Branch, rtol: Optional[float] = None) -> DarkState:
    """
    Dark state of the threefold manifold with resonant controls (D3 = D4 = 0).

    sin(phi')|1> - cos(phi')(Oc|3> +- |D||4> + Od|5>)/sqrt(D^2 + Oc^2 + Od^2),
    tan(phi') = Os*Oc / (sqrt(2)*|D|*Op).

    Raises:
        PreconditionError: D^2 != Oc^2 + Od^2, or branch does not match sign(D)
    """
    rtol = config.analytics.condition_rtol if rtol is None else rtol
    branch = Branch(branch)
    residual = manifold_residual(omega_c, omega_d, delta)
    scale = max(delta * delta, omega_c * omega_c + omega_d * omega_d)
    if scale == 0 or abs(residual) > rtol * scale:
        raise PreconditionError(
            f"threefold dark state needs D^2 = Oc^2 + Od^2; residual {residual!r}",
            residual=residual,
        )
    if math.copysign(1.0, delta) != branch.sign:
        raise PreconditionError(
            f"branch {branch.value} needs delta with sign {branch.sign:+.0f}, got {delta!r}",
            residual=residual,
        )

    phi_prime = math.atan2(omega_s * omega_c, SQRT2 * abs(delta) * omega_p)
    norm = math.sqrt(delta * delta + omega_c * omega_c + omega_d * omega_d)
    cp = math.cos(phi_prime)
    amplitudes = np.array([
        math.sin(phi_prime),
        0.0,
        -cp * omega_c / norm,
        -cp * branch.sign * abs(delta) / norm,
        -cp * omega_d / norm,
    ])
    return DarkState(amplitudes=amplitudes, branch=branch, phi_prime=phi_prime)


def null_condition_residual_for(cfg: SystemConfig) -> float:
    """
    Residual of the dark-state existence condition for a scenario.

    Twofold: D^2 - D*D3 - Oc^2. Threefold: determinant of the levels 3..5
    block, which vanishes exactly when a zero eigenvalue without |2> exists.
    """
    if cfg.n_levels == 4:
        return null_condition_residual(cfg.delta, cfg.delta_3, cfg.omega_c)
    block = build_hamiltonian(cfg, 0.0)[2:, 2:]
    return float(np.linalg.det(block))


def null_condition_satisfied(cfg: SystemConfig, rtol: Optional[float] = None) -> bool:
    rtol = config.analytics.condition_rtol if rtol is None else rtol
    if cfg.n_levels == 4:
        return null_condition_holds(cfg.delta, cfg.delta_3, cfg.omega_c, rtol)
    block = build_hamiltonian(cfg, 0.0)[2:, 2:]
    scale = float(np.max(np.abs(block))) ** 3
    residual = null_condition_residual_for(cfg)
    return residual == 0 if scale == 0 else abs(residual) <= rtol * scale


def check_dark_state_condition(cfg: SystemConfig, rtol: Optional[float] = None) -> bool:
    """
    Warn (logger and ParameterInconsistencyWarning) if cfg admits no dark state.

    Returns:
        True if the condition holds
    """
    if null_condition_satisfied(cfg, rtol):
        return True
    residual = null_condition_residual_for(cfg)
    if cfg.n_levels == 5:
        message = (
            f"threefold parameters admit no dark state: control-block determinant {residual:.6g}; "
            f"resonant controls need delta = +-sqrt(omega_c^2 + omega_d^2) = "
            f"+-{math.hypot(cfg.omega_c, cfg.omega_d):.6g}, configured delta = {cfg.delta:.6g}"
        )
    else:
        message = (
            f"parameters admit no dark state: D^2 - D*D3 - Oc^2 = {residual:.6g} "
            f"(delta = {cfg.delta:.6g}, delta_3 = {cfg.delta_3:.6g}, omega_c = {cfg.omega_c:.6g})"
        )
    logger.warning(message)
    warnings.warn(message, ParameterInconsistencyWarning, stacklevel=2)
    return False


def branch_for(cfg: SystemConfig) -> Branch:
    """Branch whose dark state the configured detuning selects."""
    if cfg.n_levels == 4:
        return branch_for_detuning(cfg.delta, cfg.delta_3, cfg.omega_c)
    return Branch.PLUS if cfg.delta > 0 else Branch.MINUS


def _require_dark_state(cfg: SystemConfig) -> None:
    if not null_condition_satisfied(cfg):
        raise PreconditionError(
            f"no analytic dark state: condition residual {null_condition_residual_for(cfg)!r}",
            residual=null_condition_residual_for(cfg),
        )
    if cfg.n_levels == 5 and (cfg.delta_3 != 0 or cfg.delta_4 != 0):
        raise PreconditionError(
            "threefold closed form needs resonant controls (delta_3 = delta_4 = 0)",
            residual=null_condition_residual_for(cfg),
        )


def dark_state_at(cfg: SystemConfig, t: float, branch: Optional[Branch] = None) -> DarkState:
    """Analytic dark state of a scenario at time t."""
    _require_dark_state(cfg)
    branch = branch_for(cfg) if branch is None else Branch(branch)
    omega_p = envelope_value(cfg.pump_envelope(), t)
    omega_s = envelope_value(cfg.stokes_envelope(), t)
    if cfg.n_levels == 4:
        angles = mixing_angles(omega_p, omega_s, cfg.delta, cfg.delta_3, cfg.omega_c)
        return dark_state_4(angles, branch)
    return dark_state_5(omega_p, omega_s, cfg.omega_c, cfg.omega_d, cfg.delta, branch)


def dark_state_series(cfg: SystemConfig, times: np.ndarray,
                      branch: Optional[Branch] = None) -> np.ndarray:
    """
    Analytic dark state at every time, vectorized.

    Returns:
        Array of shape (len(times), N)
    """
    _require_dark_state(cfg)
    branch = branch_for(cfg) if branch is None else Branch(branch)
    times = np.asarray(times, dtype=float)
    omega_p = envelope_value(cfg.pump_envelope(), times)
    omega_s = envelope_value(cfg.stokes_envelope(), times)
    out = np.zeros((len(times), cfg.n_levels))

    if cfg.n_levels == 4:
        alpha = alpha_factor(cfg.delta, cfg.delta_3)
        if math.isinf(alpha):
            theta = np.where(omega_p > 0, math.pi / 2, 0.0)
        else:
            theta = np.arctan2(alpha * omega_p, omega_s)
        phi = math.atan2(cfg.omega_c, abs(cfg.delta - cfg.delta_3))
        out[:, 0] = np.cos(theta)
        out[:, 2] = -np.sin(theta) * math.cos(phi)
        out[:, 3] = -branch.sign * np.sin(theta) * math.sin(phi)
        return out

    delta = cfg.delta
    phi_prime = np.arctan2(omega_s * cfg.omega_c, SQRT2 * abs(delta) * omega_p)
    norm = math.sqrt(delta * delta + cfg.omega_c ** 2 + cfg.omega_d ** 2)
    manifold = np.array([cfg.omega_c, branch.sign * abs(delta), cfg.omega_d]) / norm
    out[:, 0] = np.sin(phi_prime)
    out[:, 2:] = -np.cos(phi_prime)[:, None] * manifold[None, :]
    return out
