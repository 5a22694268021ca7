"""
Derived quantities of a trajectory: populations, norm drift and the final
superposition over the manifold levels.
"""
from dataclasses import dataclass
from typing import Optional
import logging

import numpy as np

from config import config
from propagator.state import Trajectory
from utils.errors import TransferIncompleteError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SuperpositionReadout:
    """
    Final state over the manifold levels |3>..|N>.

    magnitudes[k] = |C_{k+3}|; relative_phases[k] = arg(C_{k+3}/C_3) in (-pi, pi],
    NaN for k > 0 when |C_3| is below the phase floor.
    """
    magnitudes: np.ndarray
    relative_phases: np.ndarray
    residual_population: float

    @property
    def manifold_state(self) -> np.ndarray:
        """Manifold amplitudes with the phase of level 3 removed."""
        return self.magnitudes * np.exp(1j * self.relative_phases)


def populations(traj: Trajectory) -> np.ndarray:
    """P_i = |C_i|^2 at every grid point, shape (n_points, N)."""
    return np.abs(traj.amplitudes) ** 2


def norm_drift(traj: Trajectory) -> float:
    """max over the grid of |sum_i |C_i|^2 - 1|."""
    return float(np.max(np.abs(populations(traj).sum(axis=1) - 1.0)))


def max_excited_population(traj: Trajectory) -> float:
    """Largest population the excited level |2> reaches during the run."""
    return float(np.max(populations(traj)[:, 1]))


def wrap_phase(phase: np.ndarray) -> np.ndarray:
    """Map angles into (-pi, pi]."""
    wrapped = np.angle(np.exp(1j * np.asarray(phase, dtype=float)))
    return np.where(wrapped <= -np.pi, np.pi, wrapped)


def final_superposition(traj: Trajectory, threshold: Optional[float] = None) -> SuperpositionReadout:
    """
    Magnitudes and phases (relative to level 3) of the final manifold state.

    Raises:
        TransferIncompleteError: final P1 + P2 >= threshold
    """
    threshold = config.integrator.transfer_threshold if threshold is None else threshold
    final = traj.amplitudes[-1]
    residual = float(np.sum(np.abs(final[:2]) ** 2))
    if residual >= threshold:
        logger.warning(f"Transfer incomplete: P1 + P2 = {residual:.4g}")
        raise TransferIncompleteError(residual, threshold)

    manifold = final[2:]
    if abs(manifold[0]) < config.integrator.phase_floor:
        logger.warning(f"|C3| = {abs(manifold[0]):.3g}; relative phases undefined")
        phases = np.full(len(manifold), np.nan)
    else:
        phases = wrap_phase(np.angle(manifold * np.conj(manifold[0])))
    phases[0] = 0.0
    return SuperpositionReadout(
        magnitudes=np.abs(manifold),
        relative_phases=phases,
        residual_population=residual,
    )
