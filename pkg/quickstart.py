#!/usr/bin/env python3
"""
Quick start script for the STIRAP toolkit.
Propagates three builtin figure scenarios and compares the final manifold
state with the closed-form prediction.
"""

import math
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

import numpy as np

from analytics.angles import mixing_angles, population_ratio
from analytics.dark_states import branch_for, target_superposition
from cli.scenarios import get_scenario
from propagator.readout import final_superposition, max_excited_population, norm_drift
from propagator.rk4 import propagate
from utils.logger import setup_logging
from config import config

logger = setup_logging("quickstart", None, config.logging.level)

DEMO_SCENARIOS = ["fig2a", "fig2c", "fig3a"]


def main():
    """Run quick start demo."""
    print("\n" + "=" * 70)
    print("STIRAP MANIFOLD TOOLKIT - QUICK START DEMO")
    print("=" * 70 + "\n")

    for step, name in enumerate(DEMO_SCENARIOS, 1):
        scenario = get_scenario(name)
        cfg = scenario.cfg
        print(f"STEP {step}: {name}")
        print("-" * 70)
        print(f"Delta = {cfg.delta:g}, Delta_3 = {cfg.delta_3:g}, Omega_c = {cfg.omega_c:g}")
        print(f"Grid: [{scenario.grid.t_start:g}, {scenario.grid.t_end:g}], "
              f"dt = {scenario.grid.dt:g} ({scenario.grid.n_steps} steps)")

        traj = propagate(cfg, scenario.grid)
        readout = final_superposition(traj)
        final = np.abs(traj.amplitudes[-1]) ** 2

        # Closed form at the end of the pulse sequence (pump only, theta = pi/2)
        angles = mixing_angles(1.0, 0.0, cfg.delta, cfg.delta_3, cfg.omega_c)
        predicted = target_superposition(angles.phi, branch_for(cfg))
        predicted_phase = 0.0 if predicted[1] >= 0 else math.pi

        print(f"\n  {'':12}{'propagated':>14}{'analytic':>14}")
        print(f"  {'P3':12}{final[2]:14.6f}{predicted[0] ** 2:14.6f}")
        print(f"  {'P4':12}{final[3]:14.6f}{predicted[1] ** 2:14.6f}")
        print(f"  {'phase4':12}{readout.relative_phases[1]:14.6f}{predicted_phase:14.6f}")
        print(f"  {'P3/P4':12}{final[2] / final[3]:14.6f}{population_ratio(angles.phi):14.6f}")
        print(f"\n  P1 + P2 at the end: {final[0] + final[1]:.2e}")
        print(f"  max P2 during transfer: {max_excited_population(traj):.2e}")
        print(f"  norm drift: {norm_drift(traj):.2e}\n")

    print("=" * 70)
    print("QUICK START COMPLETE!")
    print("=" * 70)
    print("\nNext steps:")
    print("1. List scenarios: python main.py scenario list")
    print("2. Spectrum: python main.py spectrum --scenario fig4 --out fig4.csv")
    print("3. Run tests: pytest tests/ -v")
    print()


if __name__ == "__main__":
    main()
