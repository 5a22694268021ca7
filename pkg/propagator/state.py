"""
State vectors, time grids and trajectories.
"""
from dataclasses import dataclass
from typing import List, Optional
import math

import numpy as np

from model.system import SystemConfig
from utils.errors import ConfigurationError

MIN_STEPS = 10


@dataclass(frozen=True, eq=False)
class StateVector:
    """Complex probability amplitudes C_1..C_N."""
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.ndim != 1 or not np.all(np.isfinite(amps)):
            raise ValueError("state amplitudes must be a finite 1-D vector")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def basis(cls, n_levels: int, level: int = 0) -> "StateVector":
        """Bare state |level+1>; the default is |1>."""
        amps = np.zeros(n_levels, dtype=complex)
        amps[level] = 1.0
        return cls(amps)

    @property
    def n_levels(self) -> int:
        return len(self.amplitudes)

    @property
    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    @property
    def populations(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


@dataclass(frozen=True)
class TimeGrid:
    """Uniform grid t_start, t_start + dt, ..., t_end (units T0)."""
    t_start: float
    t_end: float
    dt: float

    def __post_init__(self):
        if not (math.isfinite(self.t_start) and math.isfinite(self.t_end)):
            raise ConfigurationError("grid bounds must be finite", field="grid.t_start")
        if not self.t_start < self.t_end:
            raise ConfigurationError(
                f"grid needs t_start < t_end, got {self.t_start} >= {self.t_end}",
                field="grid.t_end",
            )
        if not self.dt > 0:
            raise ConfigurationError(f"grid dt must be > 0, got {self.dt}", field="grid.dt")
        steps = (self.t_end - self.t_start) / self.dt
        if abs(steps - round(steps)) > 1e-9 * max(1.0, steps):
            raise ConfigurationError(
                f"(t_end - t_start)/dt = {steps!r} is not a whole number of steps",
                field="grid.dt",
            )
        if round(steps) < MIN_STEPS:
            raise ConfigurationError(
                f"grid needs at least {MIN_STEPS} steps, got {round(steps)}", field="grid.dt"
            )

    @property
    def n_steps(self) -> int:
        return int(round((self.t_end - self.t_start) / self.dt))

    @property
    def n_points(self) -> int:
        return self.n_steps + 1

    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.n_points)

    @classmethod
    def symmetric(cls, half_span: float, dt: float) -> "TimeGrid":
        """[-half_span, half_span] with half_span rounded up to whole steps."""
        n_half = max(1, math.ceil(half_span / dt - 1e-9))
        half = n_half * dt
        return cls(-half, half, dt)

    @classmethod
    def around(cls, cfg: SystemConfig, half_widths: float = 5.0,
               dt: float = 1e-3) -> "TimeGrid":
        """
        Default grid for a pulse pair: +-half_widths pulse widths, widened if
        needed so both Gaussian centers sit at least 3 widths inside.
        """
        half = max(half_widths * cfg.pulse_width, cfg.half_delay + 3.0 * cfg.pulse_width)
        return cls.symmetric(half, dt)

    @classmethod
    def window(cls, cfg: SystemConfig, half_widths: float = 0.3,
               dt: float = 1e-3) -> "TimeGrid":
        """
        Interaction window [-(tau + k*T), tau + k*T] where both pulses are
        strong; the default k = 0.3 gives [-4, 4] for T = 5, tau = 2.5.
        """
        return cls.symmetric(cfg.half_delay + half_widths * cfg.pulse_width, dt)


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Amplitudes C(t) at every grid point, in integration order."""
    grid: TimeGrid
    times: np.ndarray
    amplitudes: np.ndarray  # shape (n_points, N), complex

    def __post_init__(self):
        if len(self.times) != len(self.amplitudes):
            raise ValueError(
                f"{len(self.times)} times but {len(self.amplitudes)} states in trajectory"
            )
        self.times.setflags(write=False)
        self.amplitudes.setflags(write=False)

    def __len__(self) -> int:
        return len(self.times)

    @property
    def n_levels(self) -> int:
        return self.amplitudes.shape[1]

    @property
    def states(self) -> List[StateVector]:
        return [StateVector(row) for row in self.amplitudes]

    def state(self, index: int) -> StateVector:
        return StateVector(self.amplitudes[index])

    @property
    def initial(self) -> StateVector:
        return self.state(0)

    @property
    def final(self) -> StateVector:
        return self.state(-1)

    def at(self, t: float, atol: Optional[float] = None) -> StateVector:
        """State at the grid point closest to t."""
        i = int(np.argmin(np.abs(self.times - t)))
        atol = 0.5 * self.grid.dt if atol is None else atol
        if abs(self.times[i] - t) > atol:
            raise ValueError(f"t = {t} is not on the trajectory grid")
        return self.state(i)
