"""
Trajectory CSV: ``t,re_c1,im_c1,...,re_cN,im_cN,p1,...,pN``.
"""
from pathlib import Path
from typing import List, Union

import numpy as np

from propagator.readout import populations
from propagator.state import TimeGrid, Trajectory
from utils.csv_io import Target, read_csv, write_csv


def trajectory_header(n_levels: int) -> List[str]:
    header = ["t"]
    for i in range(1, n_levels + 1):
        header += [f"re_c{i}", f"im_c{i}"]
    header += [f"p{i}" for i in range(1, n_levels + 1)]
    return header


def write_trajectory_csv(traj: Trajectory, target: Target) -> None:
    """Write one row per grid point in integration order."""
    amps = traj.amplitudes
    pops = populations(traj)
    interleaved = np.empty((len(traj), 2 * traj.n_levels))
    interleaved[:, 0::2] = amps.real
    interleaved[:, 1::2] = amps.imag
    table = np.column_stack([traj.times, interleaved, pops])
    write_csv(target, trajectory_header(traj.n_levels), table.tolist())


def read_trajectory_csv(path: Union[str, Path]) -> Trajectory:
    """Rebuild a Trajectory from its CSV."""
    header, rows = read_csv(path)
    n_levels = (len(header) - 1) // 3
    if header != trajectory_header(n_levels):
        raise ValueError(f"{path} does not have a trajectory header")

    table = np.array(rows, dtype=float)
    times = table[:, 0]
    amplitudes = table[:, 1:1 + 2 * n_levels:2] + 1j * table[:, 2:2 + 2 * n_levels:2]
    t_lo, t_hi = float(times.min()), float(times.max())
    grid = TimeGrid(t_lo, t_hi, (t_hi - t_lo) / (len(times) - 1))
    return Trajectory(grid=grid, times=times.copy(), amplitudes=amplitudes)
