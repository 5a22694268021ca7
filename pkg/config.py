"""
Configuration management for the STIRAP manifold toolkit.

Scenario physics (Rabi frequencies, detunings, pulse timing) lives in
``model.SystemConfig``; this module only holds toolkit settings such as
integrator step, tolerances, worker counts and logging.
"""
from dataclasses import dataclass
from pathlib import Path
import os

from dotenv import load_dotenv

load_dotenv()


@dataclass
class IntegratorConfig:
    """Configuration for the RK4 propagator."""
    dt: float = 1e-3
    norm_tolerance: float = 1e-6
    grid_half_widths: float = 5.0  # default grid spans +-5 pulse widths
    transfer_threshold: float = 0.05
    phase_floor: float = 1e-6  # |C3| below which relative phases are undefined


@dataclass
class AnalyticsConfig:
    """Tolerances for the closed-form dark-state theory."""
    condition_rtol: float = 1e-9
    null_tol: float = 1e-10


@dataclass
class DiagnosticsConfig:
    """Configuration for the Jacobi eigensolver and spectrum grids."""
    jacobi_tol: float = 1e-12
    jacobi_max_sweeps: int = 100
    window_half_widths: float = 0.3  # spectrum window around the pulse overlap
    spectrum_dt: float = 0.04


@dataclass
class SweepConfig:
    """Configuration for parameter sweeps."""
    max_workers: int = 4


@dataclass
class LoggingConfig:
    """Configuration for log output."""
    log_dir: str = "logs"
    level: str = "INFO"
    log_to_file: bool = True


class Config:
    """Main configuration class."""

    def __init__(self):
        self.project_root = Path(__file__).parent

        self.integrator = IntegratorConfig(
            dt=float(os.getenv("STIRAP_DT", IntegratorConfig.dt)),
        )
        self.analytics = AnalyticsConfig()
        self.diagnostics = DiagnosticsConfig()
        self.sweep = SweepConfig(
            max_workers=int(os.getenv("STIRAP_MAX_WORKERS", SweepConfig.max_workers)),
        )
        self.logging = LoggingConfig(
            log_dir=os.getenv("STIRAP_LOG_DIR", LoggingConfig.log_dir),
            level=os.getenv("STIRAP_LOG_LEVEL", LoggingConfig.level),
        )

    def get_full_log_dir(self) -> Path:
        """Get full path to the log directory."""
        log_dir = Path(self.logging.log_dir)
        if log_dir.is_absolute():
            return log_dir
        return self.project_root / log_dir


# Global config instance
config = Config()
