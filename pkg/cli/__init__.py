"""
Command-line front end: builtin scenarios, subcommands and parameter sweeps.
"""
from .scenarios import Expectation, Scenario, SCENARIOS, builtin_scenarios, get_scenario
from .commands import (
    GridOptions,
    resolve_scenario,
    parse_overrides,
    check_expectation,
    run_simulate,
    run_darkstate,
    run_spectrum,
    run_sweep,
    list_scenarios,
)
from .sweep import SweepSpec, SweepJob, SweepRunner, build_jobs, sweep_point, sweep_header, run_sweep_table

__all__ = [
    'Expectation', 'Scenario', 'SCENARIOS', 'builtin_scenarios', 'get_scenario',
    'GridOptions', 'resolve_scenario', 'parse_overrides', 'check_expectation',
    'run_simulate', 'run_darkstate', 'run_spectrum', 'run_sweep', 'list_scenarios',
    'SweepSpec', 'SweepJob', 'SweepRunner', 'build_jobs', 'sweep_point', 'sweep_header',
    'run_sweep_table',
]
