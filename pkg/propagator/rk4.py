"""
Fixed-step classical Runge-Kutta integration of i dC/dt = H(t) C.
"""
from typing import Optional
import logging
import time

import numpy as np

from config import config
from model.hamiltonian import hamiltonian_series
from model.system import SystemConfig
from propagator.state import StateVector, TimeGrid, Trajectory
from utils.errors import ContractViolation, IntegrationAccuracyError

logger = logging.getLogger(__name__)


def propagate(cfg: SystemConfig, grid: TimeGrid, initial: Optional[StateVector] = None,
              backward: bool = False, norm_tolerance: Optional[float] = None) -> Trajectory:
    """
    Integrate the Schrodinger equation over a time grid with RK4.

    The norm is never renormalized; drift beyond ``norm_tolerance`` aborts.

    Args:
        cfg: Scenario
        grid: Time grid
        initial: Initial state (default |1>), unit norm
        backward: Integrate from grid.t_end to grid.t_start
        norm_tolerance: Allowed |<C|C> - 1| at any step

    Returns:
        Trajectory in integration order

    Raises:
        IntegrationAccuracyError: norm drift exceeded tolerance
    """
    norm_tolerance = config.integrator.norm_tolerance if norm_tolerance is None else norm_tolerance
    if initial is None:
        initial = StateVector.basis(cfg.n_levels)
    if initial.n_levels != cfg.n_levels:
        raise ContractViolation(
            f"initial state has {initial.n_levels} levels, scenario has {cfg.n_levels}"
        )
    if abs(initial.norm_squared - 1.0) > 1e-8:
        raise ContractViolation(f"initial state norm^2 is {initial.norm_squared!r}, expected 1")

    times = grid.times()
    if backward:
        times = times[::-1].copy()

    # -iH at the grid points and at the step midpoints
    K_nodes = -1j * hamiltonian_series(cfg, times)
    K_mid = -1j * hamiltonian_series(cfg, 0.5 * (times[:-1] + times[1:]))
    steps = np.diff(times)

    out = np.empty((len(times), cfg.n_levels), dtype=complex)
    c = np.array(initial.amplitudes, dtype=complex)
    out[0] = c

    logger.info(f"Propagating {cfg.n_levels}-level system over {grid.n_steps} steps "
                f"({'backward' if backward else 'forward'}, dt={grid.dt:g})")
    started = time.perf_counter()

    for i in range(len(steps)):
        h = steps[i]
        k1 = K_nodes[i] @ c
        k2 = K_mid[i] @ (c + 0.5 * h * k1)
        k3 = K_mid[i] @ (c + 0.5 * h * k2)
        k4 = K_nodes[i + 1] @ (c + h * k3)
        c = c + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        out[i + 1] = c

        drift = abs(np.vdot(c, c).real - 1.0)
        if drift > norm_tolerance:
            logger.error(f"Norm drift {drift:.3e} at step {i + 1}")
            raise IntegrationAccuracyError(drift, i + 1, float(times[i + 1]))

    final_drift = abs(np.vdot(c, c).real - 1.0)
    logger.info(f"Propagation finished in {time.perf_counter() - started:.2f}s, "
                f"final norm drift {final_drift:.2e}")
    return Trajectory(grid=grid, times=times, amplitudes=out)
