"""
Time propagation of the Schrodinger equation and trajectory readout.
"""
from .state import StateVector, TimeGrid, Trajectory
from .rk4 import propagate
from .readout import (
    SuperpositionReadout,
    populations,
    norm_drift,
    max_excited_population,
    final_superposition,
    wrap_phase,
)
from .trajectory_csv import write_trajectory_csv, read_trajectory_csv, trajectory_header

__all__ = [
    'StateVector', 'TimeGrid', 'Trajectory', 'propagate',
    'SuperpositionReadout', 'populations', 'norm_drift', 'max_excited_population',
    'final_superposition', 'wrap_phase',
    'write_trajectory_csv', 'read_trajectory_csv', 'trajectory_header',
]
