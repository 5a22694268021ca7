"""
Scenario configuration, pulse envelopes and RWA Hamiltonians.
"""
from .pulses import PulseEnvelope, EnvelopeKind, envelope_value, envelope_derivative
from .system import SystemConfig
from .hamiltonian import (
    build_hamiltonian,
    build_hamiltonian_4,
    build_hamiltonian_5,
    chain_hamiltonian,
    hamiltonian_parts,
    hamiltonian_series,
)
from .config_file import ScenarioFile, load_config_file, parse_config_text, format_config

__all__ = [
    'PulseEnvelope', 'EnvelopeKind', 'envelope_value', 'envelope_derivative',
    'SystemConfig',
    'build_hamiltonian', 'build_hamiltonian_4', 'build_hamiltonian_5',
    'chain_hamiltonian', 'hamiltonian_parts', 'hamiltonian_series',
    'ScenarioFile', 'load_config_file', 'parse_config_text', 'format_config',
]
