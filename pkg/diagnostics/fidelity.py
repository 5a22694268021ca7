"""
Dark-state fidelity along a propagated trajectory.
"""
import logging

import numpy as np

from analytics.dark_states import branch_for, dark_state_series
from model.system import SystemConfig
from propagator.state import Trajectory

logger = logging.getLogger(__name__)


def darkstate_fidelity(traj: Trajectory, cfg: SystemConfig) -> np.ndarray:
    """
    |<psi_0(t)|C(t)>|^2 at every trajectory point, with the dark-state
    branch selected by the configured detuning.

    Raises:
        PreconditionError: cfg admits no analytic dark state
    """
    branch = branch_for(cfg)
    psi = dark_state_series(cfg, traj.times, branch)
    overlaps = np.einsum("ij,ij->i", psi, traj.amplitudes)
    fidelity = np.abs(overlaps) ** 2
    logger.debug(f"Dark-state fidelity ({branch.value}): min {fidelity.min():.6f}")
    return fidelity
