"""
Closed-form dark-state theory: null-eigenvalue detunings, mixing angles,
dark states, population ratio and inverse design.
"""
from .branch import Branch
from .detuning import (
    null_detuning_pair,
    control_detuning_for,
    null_condition_residual,
    null_condition_holds,
    branch_for_detuning,
    inverse_design,
)
from .angles import MixingAngles, alpha_factor, mixing_angles, population_ratio
from .dark_states import (
    DarkState,
    dark_state_4,
    dark_state_5,
    target_superposition,
    manifold_residual,
    null_condition_residual_for,
    null_condition_satisfied,
    check_dark_state_condition,
    branch_for,
    dark_state_at,
    dark_state_series,
)
from .null_vector import numeric_null_eigenvector, fix_sign

__all__ = [
    'Branch',
    'null_detuning_pair', 'control_detuning_for', 'null_condition_residual',
    'null_condition_holds', 'branch_for_detuning', 'inverse_design',
    'MixingAngles', 'alpha_factor', 'mixing_angles', 'population_ratio',
    'DarkState', 'dark_state_4', 'dark_state_5', 'target_superposition',
    'manifold_residual', 'null_condition_residual_for', 'null_condition_satisfied',
    'check_dark_state_condition', 'branch_for', 'dark_state_at', 'dark_state_series',
    'numeric_null_eigenvector', 'fix_sign',
]
