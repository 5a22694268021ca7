#!/usr/bin/env python3
"""
Command-line interface for the STIRAP manifold toolkit.

    python main.py simulate --scenario fig2a --out fig2a.csv
    python main.py darkstate --config my.cfg --time 0
    python main.py spectrum --scenario fig4 --out fig4.csv
    python main.py sweep --scenario fig2a --sweep delta_2=1:6:2 --out sweep.csv
    python main.py scenario list
    python main.py scenario run fig3a
"""
import argparse
import logging
import sys
from typing import List, Optional

from analytics.branch import Branch
from cli.commands import (
    GridOptions,
    list_scenarios,
    resolve_scenario,
    run_darkstate,
    run_simulate,
    run_spectrum,
    run_sweep,
)
from config import config
from utils.errors import ConfigurationError, StirapError
from utils.logger import setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def _add_scenario_args(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--config", help="Scenario config file (key = value)")
    source.add_argument("--scenario", help="Builtin scenario name")
    parser.add_argument("--out", help="Output CSV path (default: stdout)")
    parser.add_argument("--dt", type=float, help="Time step")
    parser.add_argument("--t-start", type=float, dest="t_start", help="Grid start")
    parser.add_argument("--t-end", type=float, dest="t_end", help="Grid end")
    parser.add_argument("--override", action="append", default=[], metavar="KEY=VALUE",
                        help="Replace a config value (repeatable)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stirap",
        description="STIRAP into twofold and threefold degenerate manifolds",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--log-level", default=config.logging.level, help="Console log level")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="Propagate a scenario and write the trajectory CSV")
    _add_scenario_args(p)

    p = sub.add_parser("darkstate", help="Closed-form dark-state report")
    _add_scenario_args(p)
    p.add_argument("--time", type=float, default=0.0, help="Evaluation time")
    p.add_argument("--branch", choices=[b.value for b in Branch], help="Only this branch")

    p = sub.add_parser("spectrum", help="Eigenvalue spectrum and theta_dot CSV")
    _add_scenario_args(p)

    p = sub.add_parser("sweep", help="Sweep one config field")
    _add_scenario_args(p)
    p.add_argument("--sweep", required=True, metavar="FIELD=START:STOP:COUNT")
    p.add_argument("--design-ratio", type=float, dest="design_ratio",
                   help="Re-derive Delta, Delta_3 per point for this P3/P4")
    p.add_argument("--branch", choices=[b.value for b in Branch], default=Branch.PLUS.value,
                   help="Branch used with --design-ratio")
    p.add_argument("--workers", type=int, default=config.sweep.max_workers,
                   help="Worker processes")

    p = sub.add_parser("scenario", help="Builtin scenarios")
    scenario_sub = p.add_subparsers(dest="scenario_command", required=True)
    scenario_sub.add_parser("list", help="List builtin scenarios")
    run = scenario_sub.add_parser("run", help="Run a builtin scenario and check its expectations")
    run.add_argument("name")
    run.add_argument("--out", help="Trajectory CSV path")
    run.add_argument("--override", action="append", default=[], metavar="KEY=VALUE")
    return parser


def dispatch(args: argparse.Namespace) -> int:
    if args.command == "scenario":
        if args.scenario_command == "list":
            return list_scenarios()
        scenario = resolve_scenario(scenario=args.name, overrides=args.override)
        return run_simulate(scenario, args.out)

    grid_options = GridOptions(dt=args.dt, t_start=args.t_start, t_end=args.t_end)
    scenario = resolve_scenario(args.config, args.scenario, args.override, grid_options)

    if args.command == "simulate":
        return run_simulate(scenario, args.out)
    if args.command == "darkstate":
        branch = Branch(args.branch) if args.branch else None
        return run_darkstate(scenario, t=args.time, branch=branch)
    if args.command == "spectrum":
        return run_spectrum(scenario, args.out)
    return run_sweep(scenario, args.sweep, args.out, design_ratio=args.design_ratio,
                     branch=Branch(args.branch), max_workers=args.workers)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    log_dir = str(config.get_full_log_dir()) if config.logging.log_to_file else None
    setup_logging("", log_dir, args.log_level)

    try:
        return dispatch(args)
    except ConfigurationError as e:
        logger.error(f"Configuration error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except StirapError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
