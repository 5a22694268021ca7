"""
Shared fixtures. Full figure propagations are cached for the whole session.
"""
import sys
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(project_root))

from cli.scenarios import get_scenario
from propagator.rk4 import propagate


@pytest.fixture(scope="session")
def figure_run():
    """Propagate a builtin scenario once; returns (scenario, trajectory)."""
    cache = {}

    def run(name):
        if name not in cache:
            scenario = get_scenario(name)
            cache[name] = (scenario, propagate(scenario.cfg, scenario.grid))
        return cache[name]

    return run


@pytest.fixture
def no_log_files(monkeypatch):
    """Keep CLI runs from writing rotating log files."""
    from config import config
    monkeypatch.setattr(config.logging, "log_to_file", False)
