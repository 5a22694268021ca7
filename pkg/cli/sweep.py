"""
One-dimensional parameter sweeps.

Each sweep point is an independent propagation plus a windowed spectrum;
points are farmed out to a process pool and gathered in input order.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence
import asyncio
import logging
import math

import numpy as np

from analytics.branch import Branch
from analytics.detuning import inverse_design, null_condition_holds
from analytics.angles import mixing_angles, population_ratio
from config import config
from diagnostics.spectrum import adiabaticity_report, eigen_spectrum
from model.system import SystemConfig
from propagator.rk4 import propagate
from propagator.state import TimeGrid
from utils.csv_io import Target, write_csv
from utils.errors import ConfigurationError, DomainError

logger = logging.getLogger(__name__)

TEXT_FIELDS = ("n_levels", "pulse_shape")


@dataclass(frozen=True)
class SweepSpec:
    """``field=start:stop:count``; values are evenly spaced and ascending."""
    field: str
    start: float
    stop: float
    count: int

    @classmethod
    def parse(cls, text: str) -> "SweepSpec":
        valid = [f for f in SystemConfig.field_names() if f not in TEXT_FIELDS]
        if "=" not in text:
            raise ConfigurationError(f"sweep must look like field=start:stop:count, got {text!r}",
                                     field="sweep")
        name, _, rng = (part.strip() for part in text.partition("="))
        if name not in valid:
            raise ConfigurationError(
                f"cannot sweep {name!r}; sweepable fields: {', '.join(valid)}", field="sweep"
            )
        parts = rng.split(":")
        if len(parts) != 3:
            raise ConfigurationError(f"sweep range must be start:stop:count, got {rng!r}",
                                     field="sweep")
        try:
            start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            raise ConfigurationError(f"cannot parse sweep range {rng!r}", field="sweep") from None
        if count < 0 or not (math.isfinite(start) and math.isfinite(stop)):
            raise ConfigurationError(f"invalid sweep range {rng!r}", field="sweep")
        return cls(name, start, stop, count)

    def values(self) -> List[float]:
        if self.count == 0:
            return []
        if self.count == 1:
            return [self.start]
        return sorted(np.linspace(self.start, self.stop, self.count).tolist())


@dataclass(frozen=True)
class SweepJob:
    cfg: SystemConfig
    grid: TimeGrid
    value: float
    spectrum_dt: float


def sweep_header(n_levels: int) -> List[str]:
    return (["value"] + [f"p{i}" for i in range(1, n_levels + 1)]
            + ["ratio", "ratio_analytic", "margin"])


def _analytic_ratio(cfg: SystemConfig) -> float:
    if cfg.n_levels != 4:
        return math.nan
    if not null_condition_holds(cfg.delta, cfg.delta_3, cfg.omega_c,
                                config.analytics.condition_rtol):
        return math.nan
    angles = mixing_angles(cfg.omega_p_peak, cfg.omega_s_peak,
                           cfg.delta, cfg.delta_3, cfg.omega_c)
    try:
        return population_ratio(angles.phi)
    except DomainError:
        return math.inf


def sweep_point(job: SweepJob) -> List[float]:
    """Final populations, P3/P4, analytic R and adiabaticity margin at one point."""
    cfg = job.cfg
    traj = propagate(cfg, job.grid)
    final = np.abs(traj.amplitudes[-1]) ** 2
    ratio = final[2] / final[3] if final[3] > 0 else math.inf

    window = TimeGrid.window(cfg, config.diagnostics.window_half_widths, job.spectrum_dt)
    margin = adiabaticity_report(eigen_spectrum(cfg, window)).margin_ratio
    return [job.value, *final.tolist(), ratio, _analytic_ratio(cfg), margin]


class SweepRunner:
    """Runs sweep points concurrently on a process pool."""

    def __init__(self, max_workers: Optional[int] = None):
        self.max_workers = config.sweep.max_workers if max_workers is None else max_workers
        if self.max_workers < 1:
            raise ConfigurationError("max_workers must be at least 1", field="workers")

    async def _gather(self, jobs: Sequence[SweepJob]) -> List[List[float]]:
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=self.max_workers) as pool:
            tasks = [loop.run_in_executor(pool, sweep_point, job) for job in jobs]
            return list(await asyncio.gather(*tasks))

    def run(self, jobs: Sequence[SweepJob]) -> List[List[float]]:
        if not jobs:
            return []
        logger.info(f"Sweeping {len(jobs)} points on {self.max_workers} worker(s)")
        if self.max_workers == 1 or len(jobs) == 1:
            return [sweep_point(job) for job in jobs]
        return asyncio.run(self._gather(jobs))


def build_jobs(base: SystemConfig, grid: TimeGrid, spec: SweepSpec,
               design_ratio: Optional[float] = None,
               branch: Branch = Branch.PLUS,
               spectrum_dt: Optional[float] = None) -> List[SweepJob]:
    """
    One job per sweep value. With ``design_ratio`` the detunings of every
    point are re-derived so the target P3/P4 holds for that point's Omega_c.
    """
    spectrum_dt = config.diagnostics.spectrum_dt if spectrum_dt is None else spectrum_dt
    jobs = []
    for value in spec.values():
        cfg = base.with_overrides(**{spec.field: value})
        if design_ratio is not None:
            if cfg.n_levels != 4:
                raise ConfigurationError("--design-ratio needs a four-level system",
                                         field="design_ratio")
            delta, delta_3 = inverse_design(design_ratio, branch, cfg.omega_c)
            cfg = cfg.with_overrides(delta_2=cfg.delta_1 - delta, delta_3=delta_3)
        jobs.append(SweepJob(cfg=cfg, grid=grid, value=value, spectrum_dt=spectrum_dt))
    return jobs


def run_sweep_table(base: SystemConfig, grid: TimeGrid, spec: SweepSpec, target: Target,
                    design_ratio: Optional[float] = None, branch: Branch = Branch.PLUS,
                    max_workers: Optional[int] = None) -> List[List[float]]:
    """Run a sweep and write ``value,p1..pN,ratio,ratio_analytic,margin``."""
    jobs = build_jobs(base, grid, spec, design_ratio, branch)
    rows = SweepRunner(max_workers).run(jobs)
    write_csv(target, sweep_header(base.n_levels), rows)
    return rows
