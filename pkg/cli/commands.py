"""
Subcommand implementations behind ``main.py``.

Every command writes data (CSV) to a file or stdout and a ``key = value``
summary to ``out``; each returns a process exit code. Errors propagate as
``StirapError`` and are mapped to exit codes by the entry point.
"""
from dataclasses import dataclass, replace
from typing import IO, Dict, List, Optional, Sequence, Tuple
import logging
import math
import sys

import numpy as np

from analytics.angles import mixing_angles, population_ratio
from analytics.branch import Branch
from analytics.dark_states import (
    check_dark_state_condition,
    dark_state_4,
    dark_state_5,
    manifold_residual,
    null_condition_residual_for,
    null_condition_satisfied,
    target_superposition,
)
from analytics.detuning import null_detuning_pair
from cli.scenarios import SCENARIOS, Scenario, get_scenario
from cli.sweep import SweepSpec, run_sweep_table
from config import config
from diagnostics.spectrum import adiabaticity_report, eigen_spectrum, write_spectrum_csv
from model.config_file import GRID_KEYS, load_config_file, parse_value
from model.pulses import envelope_value
from model.system import SystemConfig
from propagator.readout import (
    SuperpositionReadout,
    final_superposition,
    max_excited_population,
    norm_drift,
    wrap_phase,
)
from propagator.rk4 import propagate
from propagator.state import TimeGrid
from propagator.trajectory_csv import write_trajectory_csv
from utils.csv_io import format_float
from utils.errors import ConfigurationError, DomainError, TransferIncompleteError

logger = logging.getLogger(__name__)

Check = Tuple[str, bool, str]


@dataclass(frozen=True)
class GridOptions:
    """Grid flags from the command line; None keeps the scenario's value."""
    dt: Optional[float] = None
    t_start: Optional[float] = None
    t_end: Optional[float] = None


def _format(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (float, int, np.floating)):
        return format_float(float(value))
    if isinstance(value, np.ndarray):
        return ",".join(format_float(float(v)) for v in value)
    return str(value)


def emit(out: Optional[IO[str]], key: str, value) -> None:
    """Print one ``key = value`` summary line (stdout when out is None)."""
    (sys.stdout if out is None else out).write(f"{key} = {_format(value)}\n")


def parse_overrides(items: Sequence[str]) -> Tuple[Dict[str, object], Dict[str, float]]:
    """
    Split ``key=value`` overrides into SystemConfig fields and grid keys.

    Raises:
        ConfigurationError: malformed item or unknown key
    """
    valid = set(SystemConfig.field_names()) | set(GRID_KEYS)
    system: Dict[str, object] = {}
    grid: Dict[str, float] = {}
    for item in items:
        key, sep, raw = (part.strip() for part in item.partition("="))
        if not sep or not raw:
            raise ConfigurationError(f"override must be key=value, got {item!r}", field="override")
        if key not in valid:
            raise ConfigurationError(
                f"unknown override key {key!r}; valid keys: {', '.join(sorted(valid))}",
                field=key,
            )
        value = parse_value(key, raw)
        if key in GRID_KEYS:
            grid[key] = float(value)
        else:
            system[key] = value
    return system, grid


def _grid_for(cfg: SystemConfig, base: Optional[TimeGrid], values: Dict[str, float]) -> TimeGrid:
    dt = values.get("grid.dt", base.dt if base else config.integrator.dt)
    if base is None:
        base = TimeGrid.around(cfg, config.integrator.grid_half_widths, dt)
    return TimeGrid(
        values.get("grid.t_start", base.t_start),
        values.get("grid.t_end", base.t_end),
        dt,
    )


def resolve_scenario(config_path: Optional[str] = None, scenario: Optional[str] = None,
                     overrides: Sequence[str] = (),
                     grid_options: GridOptions = GridOptions()) -> Scenario:
    """
    Build the scenario a command runs on: a builtin by name or a config file,
    then ``--override`` items, then the grid flags.

    Expectations of a builtin are dropped once its physics is overridden.
    """
    if (config_path is None) == (scenario is None):
        raise ConfigurationError("give exactly one of --config or --scenario", field="config")

    if scenario is not None:
        base = get_scenario(scenario)
        cfg, grid, grid_values = base.cfg, base.grid, {}
    else:
        parsed = load_config_file(config_path)
        base = Scenario(name=str(config_path), cfg=parsed.cfg, grid=None)
        cfg, grid, grid_values = parsed.cfg, None, dict(parsed.grid)

    system, grid_overrides = parse_overrides(overrides)
    if system:
        cfg = cfg.with_overrides(**system)
    grid_values.update(grid_overrides)
    for key, value in (("grid.dt", grid_options.dt), ("grid.t_start", grid_options.t_start),
                       ("grid.t_end", grid_options.t_end)):
        if value is not None:
            grid_values[key] = value

    grid = _grid_for(cfg, grid, grid_values)
    expected = None if system else base.expected
    return replace(base, cfg=cfg, grid=grid, expected=expected)


def check_expectation(scenario: Scenario, final_populations: np.ndarray,
                      readout: Optional[SuperpositionReadout]) -> List[Check]:
    """Compare a run against the scenario's expectation record."""
    expected = scenario.expected
    if expected is None:
        return []
    checks: List[Check] = []

    residual = float(final_populations[0] + final_populations[1])
    checks.append(("residual", residual < expected.max_residual,
                   f"P1+P2 = {residual:.4g} (< {expected.max_residual:g})"))

    for level, target in sorted(expected.populations.items()):
        got = float(final_populations[level - 1])
        checks.append((f"p{level}", abs(got - target) <= expected.population_tol,
                       f"{got:.6f} vs {target:.6f} +- {expected.population_tol:g}"))

    if expected.ratio is not None:
        p3, p4 = final_populations[2], final_populations[3]
        got = p3 / p4 if p4 > 0 else math.inf
        ok = math.isfinite(got) and abs(got / expected.ratio - 1.0) <= expected.ratio_rtol
        checks.append(("ratio", ok, f"{got:.6g} vs {expected.ratio:.6g} +- {expected.ratio_rtol:.0%}"))

    if expected.relative_phase is not None:
        if readout is None:
            checks.append(("phase4", False, "no superposition readout"))
        else:
            got = float(readout.relative_phases[1])
            distance = abs(float(wrap_phase(got - expected.relative_phase)))
            checks.append(("phase4", distance <= expected.phase_tol,
                           f"{got:.6f} vs {expected.relative_phase:.6f} +- {expected.phase_tol:g}"))
    return checks


def run_simulate(scenario: Scenario, output_path: Optional[str] = None,
                 out: Optional[IO[str]] = None) -> int:
    """
    Propagate a scenario, write its trajectory CSV and print the final-state
    summary. With no output path only the summary is printed.
    """
    cfg = scenario.cfg
    check_dark_state_condition(cfg)
    traj = propagate(cfg, scenario.grid)
    if output_path is not None:
        write_trajectory_csv(traj, output_path)

    final = np.abs(traj.amplitudes[-1]) ** 2
    emit(out, "scenario", scenario.name)
    for i, p in enumerate(final, 1):
        emit(out, f"p{i}", p)

    readout = None
    try:
        readout = final_superposition(traj)
    except TransferIncompleteError as e:
        logger.warning(str(e))
        emit(out, "transfer", "incomplete")
        emit(out, "residual", e.residual_population)
    else:
        emit(out, "transfer", "complete")
        emit(out, "residual", readout.residual_population)
        for k, (m, ph) in enumerate(zip(readout.magnitudes, readout.relative_phases), 3):
            emit(out, f"m{k}", m)
            emit(out, f"phase{k}", ph)

    emit(out, "ratio", final[2] / final[3] if final[3] > 0 else math.inf)
    emit(out, "norm_drift", norm_drift(traj))
    emit(out, "max_p2", max_excited_population(traj))

    failed = 0
    for name, ok, detail in check_expectation(scenario, final, readout):
        emit(out, f"check.{name}", f"{'pass' if ok else 'FAIL'} ({detail})")
        failed += not ok
    if failed:
        logger.error(f"Scenario {scenario.name}: {failed} check(s) failed")
        return 3
    return 0


def _darkstate_4(cfg: SystemConfig, t: float, branches: Sequence[Branch],
                 out: Optional[IO[str]]) -> None:
    plus, minus = null_detuning_pair(cfg.delta_3, cfg.omega_c)
    emit(out, "delta_plus", plus)
    emit(out, "delta_minus", minus)
    emit(out, "delta", cfg.delta)
    emit(out, "condition_holds", null_condition_satisfied(cfg))
    emit(out, "condition_residual", null_condition_residual_for(cfg))
    if cfg.omega_c == 0:
        emit(out, "reduction", "normal-lambda (omega_c = 0, phi = 0)")

    omega_p = float(envelope_value(cfg.pump_envelope(), t))
    omega_s = float(envelope_value(cfg.stokes_envelope(), t))
    emit(out, "time", t)
    emit(out, "omega_p", omega_p)
    emit(out, "omega_s", omega_s)
    if omega_p == 0 and omega_s == 0:
        emit(out, "angles", "undefined (both pulses zero)")
        return
    try:
        angles = mixing_angles(omega_p, omega_s, cfg.delta, cfg.delta_3, cfg.omega_c)
    except DomainError as e:
        emit(out, "angles", f"undefined ({e})")
        return

    emit(out, "alpha", angles.alpha)
    emit(out, "theta", angles.theta)
    emit(out, "phi", angles.phi)
    for branch in branches:
        emit(out, f"dark_state.{branch.value}", dark_state_4(angles, branch).amplitudes)
        emit(out, f"target.{branch.value}", target_superposition(angles.phi, branch))
    try:
        emit(out, "ratio", population_ratio(angles.phi))
    except DomainError:
        emit(out, "ratio", math.inf)


def _darkstate_5(cfg: SystemConfig, t: float, branches: Sequence[Branch],
                 out: Optional[IO[str]]) -> None:
    emit(out, "delta", cfg.delta)
    emit(out, "manifold_residual", manifold_residual(cfg.omega_c, cfg.omega_d, cfg.delta))
    emit(out, "block_determinant", null_condition_residual_for(cfg))
    holds = check_dark_state_condition(cfg)
    emit(out, "condition_holds", holds)

    omega_p = float(envelope_value(cfg.pump_envelope(), t))
    omega_s = float(envelope_value(cfg.stokes_envelope(), t))
    emit(out, "time", t)
    emit(out, "omega_p", omega_p)
    emit(out, "omega_s", omega_s)
    if not holds or cfg.delta_3 != 0 or cfg.delta_4 != 0:
        emit(out, "dark_state", "none (no closed form for these detunings)")
        return
    for branch in branches:
        if branch.sign != math.copysign(1.0, cfg.delta):
            emit(out, f"dark_state.{branch.value}", "none (branch must match sign of delta)")
            continue
        state = dark_state_5(omega_p, omega_s, cfg.omega_c, cfg.omega_d, cfg.delta, branch)
        emit(out, "phi_prime", state.phi_prime)
        emit(out, f"dark_state.{branch.value}", state.amplitudes)
        manifold = state.amplitudes[2:]
        emit(out, "manifold_populations", manifold ** 2 / np.sum(manifold ** 2))


def run_darkstate(scenario: Scenario, t: float = 0.0, branch: Optional[Branch] = None,
                  out: Optional[IO[str]] = None) -> int:
    """Print the closed-form dark-state report at time t."""
    branches = [Branch(branch)] if branch is not None else [Branch.PLUS, Branch.MINUS]
    emit(out, "scenario", scenario.name)
    if scenario.cfg.n_levels == 4:
        _darkstate_4(scenario.cfg, t, branches, out)
    else:
        _darkstate_5(scenario.cfg, t, branches, out)
    return 0


def run_spectrum(scenario: Scenario, output_path: Optional[str] = None,
                 out: Optional[IO[str]] = None) -> int:
    """
    Write ``t,lambda1..lambdaN,theta_dot``. The adiabaticity summary is
    printed only when the CSV goes to a file.
    """
    series = eigen_spectrum(scenario.cfg, scenario.grid)
    write_spectrum_csv(series, output_path if output_path is not None else out)
    if output_path is None:
        return 0

    report = adiabaticity_report(series, scenario.cfg)
    null_counts = np.sum(np.abs(series.eigenvalues) < config.analytics.null_tol, axis=1)
    emit(out, "scenario", scenario.name)
    emit(out, "points", len(series))
    emit(out, "null_eigenvalues_min", int(null_counts.min()))
    emit(out, "null_eigenvalues_max", int(null_counts.max()))
    emit(out, "min_gap", report.min_gap)
    emit(out, "min_gap_time", report.min_gap_time)
    emit(out, "max_theta_dot", report.max_theta_dot)
    emit(out, "max_theta_dot_time", report.max_theta_dot_time)
    emit(out, "margin_ratio", report.margin_ratio)
    emit(out, "pump_area", report.pulse_areas[0])
    emit(out, "stokes_area", report.pulse_areas[1])
    return 0


def run_sweep(scenario: Scenario, sweep_spec: str, output_path: Optional[str] = None,
              design_ratio: Optional[float] = None, branch: Optional[Branch] = None,
              max_workers: Optional[int] = None, out: Optional[IO[str]] = None) -> int:
    """Sweep one SystemConfig field and write one CSV row per value."""
    spec = SweepSpec.parse(sweep_spec)
    branch = Branch.PLUS if branch is None else Branch(branch)
    rows = run_sweep_table(scenario.cfg, scenario.grid, spec,
                           output_path if output_path is not None else out,
                           design_ratio=design_ratio, branch=branch, max_workers=max_workers)
    logger.info(f"Sweep of {spec.field}: {len(rows)} row(s)")
    return 0


def list_scenarios(out: Optional[IO[str]] = None) -> int:
    for name, scenario in SCENARIOS.items():
        cfg = scenario.cfg
        line = (f"{name}: n_levels={cfg.n_levels} delta={_format(cfg.delta)} "
                f"delta_3={_format(cfg.delta_3)} omega_c={_format(cfg.omega_c)}")
        if scenario.notes:
            line += f"  # {scenario.notes}"
        (sys.stdout if out is None else out).write(line + "\n")
    return 0
