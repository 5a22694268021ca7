"""
Rotating-wave Hamiltonians of the 4-level (twofold manifold) and 5-level
(threefold manifold) Lambda systems.

Levels are ordered |1>, |2>, |3>, ... and the couplings form a nearest-neighbour
chain 1-2-3-4(-5). Rabi frequencies enter as written (no factor 1/2) and
hbar = 1, so every matrix is H(t)/hbar in units of 1/T0.
"""
from typing import Sequence, Tuple

import numpy as np

from model.pulses import envelope_value
from model.system import SystemConfig
from utils.errors import ConfigurationError


def chain_hamiltonian(couplings: Sequence[float], diagonal: Sequence[float]) -> np.ndarray:
    """
    Build a real symmetric tridiagonal matrix.

    Args:
        couplings: Off-diagonal entries H[i, i+1] = H[i+1, i]
        diagonal: Diagonal entries, one per level

    Returns:
        N x N matrix
    """
    n = len(diagonal)
    if len(couplings) != n - 1:
        raise ValueError(f"{n} levels need {n - 1} couplings, got {len(couplings)}")
    H = np.diag(np.asarray(diagonal, dtype=float))
    idx = np.arange(n - 1)
    H[idx, idx + 1] = couplings
    H[idx + 1, idx] = couplings
    return H


def diagonal_of(cfg: SystemConfig) -> Tuple[float, ...]:
    """Detuning diagonal (0, -D1, -D, -(D-D3)[, -(D-D3-D4)])."""
    delta = cfg.delta
    diag = (0.0, -cfg.delta_1, -delta, -(delta - cfg.delta_3))
    if cfg.n_levels == 5:
        diag += (-(delta - cfg.delta_3 - cfg.delta_4),)
    return diag


def _control_couplings(cfg: SystemConfig) -> Tuple[float, ...]:
    if cfg.n_levels == 5:
        return (cfg.omega_c, cfg.omega_d)
    return (cfg.omega_c,)


def build_hamiltonian_4(cfg: SystemConfig, t: float) -> np.ndarray:
    """RWA Hamiltonian of the twofold-manifold system at time t."""
    if cfg.n_levels != 4:
        raise ConfigurationError(
            f"build_hamiltonian_4 needs n_levels = 4, got {cfg.n_levels}", field="n_levels"
        )
    return _build(cfg, t)


def build_hamiltonian_5(cfg: SystemConfig, t: float) -> np.ndarray:
    """Chain extension of the four-level Hamiltonian to the threefold manifold |3>, |4>, |5>."""
    if cfg.n_levels != 5:
        raise ConfigurationError(
            f"build_hamiltonian_5 needs n_levels = 5, got {cfg.n_levels}", field="n_levels"
        )
    return _build(cfg, t)


def build_hamiltonian(cfg: SystemConfig, t: float) -> np.ndarray:
    """Dispatch on cfg.n_levels."""
    if cfg.n_levels == 4:
        return build_hamiltonian_4(cfg, t)
    return build_hamiltonian_5(cfg, t)


def _build(cfg: SystemConfig, t: float) -> np.ndarray:
    couplings = (
        envelope_value(cfg.pump_envelope(), t),
        envelope_value(cfg.stokes_envelope(), t),
    ) + _control_couplings(cfg)
    return chain_hamiltonian(couplings, diagonal_of(cfg))


def hamiltonian_parts(cfg: SystemConfig) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Split H(t) = H0 + Omega_p(t) * Vp + Omega_s(t) * Vs.

    Returns:
        (H0, Vp, Vs), all N x N
    """
    n = cfg.n_levels
    H0 = chain_hamiltonian((0.0, 0.0) + _control_couplings(cfg), diagonal_of(cfg))
    Vp = np.zeros((n, n))
    Vp[0, 1] = Vp[1, 0] = 1.0
    Vs = np.zeros((n, n))
    Vs[1, 2] = Vs[2, 1] = 1.0
    return H0, Vp, Vs


def hamiltonian_series(cfg: SystemConfig, times: np.ndarray) -> np.ndarray:
    """
    Evaluate H at many times at once.

    Returns:
        Array of shape (len(times), N, N)
    """
    times = np.asarray(times, dtype=float)
    H0, Vp, Vs = hamiltonian_parts(cfg)
    omega_p = envelope_value(cfg.pump_envelope(), times)
    omega_s = envelope_value(cfg.stokes_envelope(), times)
    return (H0[None, :, :]
            + omega_p[:, None, None] * Vp[None, :, :]
            + omega_s[:, None, None] * Vs[None, :, :])
