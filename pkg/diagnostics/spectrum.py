"""
Adiabaticity picture: instantaneous eigenvalues, mixing-angle rate and the
gap-versus-rate report.
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple
import logging
import math

import numpy as np

from analytics.angles import alpha_factor
from config import config
from model.hamiltonian import hamiltonian_series
from model.pulses import envelope_derivative, envelope_value
from model.system import SystemConfig
from diagnostics.jacobi import jacobi_eigenvalues
from propagator.state import TimeGrid
from utils.csv_io import Target, write_csv
from utils.errors import UndefinedAngleError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SpectrumSeries:
    """Sorted eigenvalues of H(t) and the mixing-angle rate on a time grid."""
    times: np.ndarray
    eigenvalues: np.ndarray  # shape (n_points, N), ascending per row
    theta_dot: np.ndarray

    def __len__(self) -> int:
        return len(self.times)


@dataclass(frozen=True)
class AdiabaticityReport:
    """Smallest non-dark gap against the fastest mixing-angle rotation."""
    min_gap: float
    min_gap_time: float
    max_theta_dot: float
    max_theta_dot_time: float
    margin_ratio: float
    pulse_areas: Optional[Tuple[float, float]] = None  # (Op*T, Os*T)


def transfer_alpha(cfg: SystemConfig) -> float:
    """
    Factor in tan(theta) = alpha * Op / Os.

    Twofold: sqrt(1 + D/(D - D3)). Threefold (resonant controls):
    theta = pi/2 - phi' gives alpha = sqrt(2)|D| / Oc.
    """
    if cfg.n_levels == 4:
        return alpha_factor(cfg.delta, cfg.delta_3)
    if cfg.omega_c == 0:
        return math.inf
    return math.sqrt(2.0) * abs(cfg.delta) / cfg.omega_c


def theta_dot(cfg: SystemConfig, t: float) -> float:
    """
    Analytic rate of the transfer angle,
    alpha (dOp*Os - Op*dOs) / (Os^2 + alpha^2 Op^2).

    Raises:
        UndefinedAngleError: both envelopes vanish at t
    """
    pump, stokes = cfg.pump_envelope(), cfg.stokes_envelope()
    omega_p, omega_s = envelope_value(pump, t), envelope_value(stokes, t)
    if omega_p == 0 and omega_s == 0:
        raise UndefinedAngleError(f"mixing angle undefined at t={t}: both envelopes are zero")
    alpha = transfer_alpha(cfg)
    if math.isinf(alpha):
        return 0.0
    numerator = envelope_derivative(pump, t) * omega_s - omega_p * envelope_derivative(stokes, t)
    return alpha * numerator / (omega_s ** 2 + alpha ** 2 * omega_p ** 2)


def theta_dot_series(cfg: SystemConfig, times: np.ndarray) -> np.ndarray:
    """
    Vectorized theta_dot. Where both envelopes are exactly zero the angle is
    frozen and its rate is reported as 0.
    """
    times = np.asarray(times, dtype=float)
    alpha = transfer_alpha(cfg)
    if math.isinf(alpha):
        return np.zeros_like(times)
    pump, stokes = cfg.pump_envelope(), cfg.stokes_envelope()
    omega_p, omega_s = envelope_value(pump, times), envelope_value(stokes, times)
    numerator = envelope_derivative(pump, times) * omega_s - omega_p * envelope_derivative(stokes, times)
    denominator = omega_s ** 2 + alpha ** 2 * omega_p ** 2
    safe = np.where(denominator > 0, denominator, 1.0)
    return np.where(denominator > 0, alpha * numerator / safe, 0.0)


def eigen_spectrum(cfg: SystemConfig, grid: TimeGrid) -> SpectrumSeries:
    """All eigenvalues of H(t) (cyclic Jacobi) and theta_dot on a grid."""
    times = grid.times()
    hamiltonians = hamiltonian_series(cfg, times)
    eigenvalues = np.array([jacobi_eigenvalues(H) for H in hamiltonians])
    logger.info(f"Computed spectrum at {len(times)} points")
    return SpectrumSeries(times=times, eigenvalues=eigenvalues,
                          theta_dot=theta_dot_series(cfg, times))


def nonzero_gaps(eigenvalues: np.ndarray, tol: Optional[float] = None) -> np.ndarray:
    """
    Per time point, the smallest non-null |lambda|.

    The eigenvalue closest to zero is dropped only where it is null, i.e.
    below tol * max(1, max|lambda|); off the null condition every
    eigenvalue counts.
    """
    tol = config.analytics.null_tol if tol is None else tol
    magnitudes = np.sort(np.abs(eigenvalues), axis=1)
    scale = np.maximum(1.0, magnitudes[:, -1])
    is_null = magnitudes[:, 0] < tol * scale
    return np.where(is_null, magnitudes[:, 1], magnitudes[:, 0])


def adiabaticity_report(series: SpectrumSeries,
                        cfg: Optional[SystemConfig] = None) -> AdiabaticityReport:
    """
    Compare the smallest non-zero eigenvalue magnitude over time with the
    largest |theta_dot|. A margin ratio well above 1 indicates adiabatic
    following; no threshold is applied here.
    """
    if len(series) == 0:
        raise ValueError("empty spectrum series")

    gaps = nonzero_gaps(series.eigenvalues)
    rates = np.abs(series.theta_dot)
    i_gap = int(np.argmin(gaps))
    i_rate = int(np.argmax(rates))
    max_rate = float(rates[i_rate])
    min_gap = float(gaps[i_gap])
    margin = math.inf if max_rate == 0 else min_gap / max_rate

    areas = None
    if cfg is not None:
        areas = (cfg.omega_p_peak * cfg.pulse_width, cfg.omega_s_peak * cfg.pulse_width)

    return AdiabaticityReport(
        min_gap=min_gap,
        min_gap_time=float(series.times[i_gap]),
        max_theta_dot=max_rate,
        max_theta_dot_time=float(series.times[i_rate]),
        margin_ratio=margin,
        pulse_areas=areas,
    )


def spectrum_header(n_levels: int) -> List[str]:
    return ["t"] + [f"lambda{i}" for i in range(1, n_levels + 1)] + ["theta_dot"]


def write_spectrum_csv(series: SpectrumSeries, target: Target) -> None:
    """Write ``t,lambda1..lambdaN,theta_dot``."""
    table = np.column_stack([series.times, series.eigenvalues, series.theta_dot])
    write_csv(target, spectrum_header(series.eigenvalues.shape[1]), table.tolist())
