"""
Null-eigenvalue detuning condition, its inversion, and inverse design of
detunings for a requested population ratio.
"""
from typing import Tuple
import logging
import math

from analytics.branch import Branch
from utils.errors import DomainError, SingularInversionError

logger = logging.getLogger(__name__)


def null_detuning_pair(delta_3: float, omega_c: float) -> Tuple[float, float]:
    """
    Two-photon detunings for which the Hamiltonian has a zero eigenvalue.

    Args:
        delta_3: Control detuning
        omega_c: Control Rabi frequency

    Returns:
        (delta_plus, delta_minus), roots of D^2 - D*D3 - Oc^2 = 0, plus >= minus
    """
    root = math.hypot(delta_3, 2.0 * omega_c)
    # Product of the roots is -Oc^2; use it for the smaller-magnitude root
    # to avoid cancellation when |D3| >> Oc
    if delta_3 >= 0:
        plus = 0.5 * (delta_3 + root)
        minus = -omega_c ** 2 / plus if plus != 0 else 0.0
    else:
        minus = 0.5 * (delta_3 - root)
        plus = -omega_c ** 2 / minus
    return plus, minus


def control_detuning_for(delta: float, omega_c: float) -> float:
    """
    Control detuning D3 that makes ``delta`` a null-eigenvalue detuning.

    Raises:
        SingularInversionError: delta == 0
    """
    if delta == 0:
        raise SingularInversionError(
            "cannot invert the null condition at delta = 0 "
            "(it holds there only for omega_c = 0, for every delta_3)",
            value=delta,
        )
    return (delta * delta - omega_c * omega_c) / delta


def null_condition_residual(delta: float, delta_3: float, omega_c: float) -> float:
    """D^2 - D*D3 - Oc^2; zero when the dark state exists."""
    return delta * delta - delta * delta_3 - omega_c * omega_c


def null_condition_holds(delta: float, delta_3: float, omega_c: float,
                         rtol: float = 1e-9) -> bool:
    """Relative check of the null condition against max(D^2, Oc^2, |D*D3|)."""
    scale = max(delta * delta, omega_c * omega_c, abs(delta * delta_3))
    residual = null_condition_residual(delta, delta_3, omega_c)
    if scale == 0:
        return residual == 0
    return abs(residual) <= rtol * scale


def branch_for_detuning(delta: float, delta_3: float, omega_c: float) -> Branch:
    """Plus iff delta is (closer to) the upper root of the null condition."""
    plus, minus = null_detuning_pair(delta_3, omega_c)
    return Branch.PLUS if abs(delta - plus) <= abs(delta - minus) else Branch.MINUS


def inverse_design(target_ratio: float, branch: Branch, omega_c: float) -> Tuple[float, float]:
    """
    Choose (delta, delta_3) so the final population ratio P3/P4 equals target_ratio.

    Uses R = Oc^2 / D^2, so |D| = Oc / sqrt(R), with the sign of D picking
    the branch, and D3 from the inverted null condition.

    Args:
        target_ratio: Requested P3/P4 (> 0)
        branch: Which dark state (plus: D > 0, minus: D < 0)
        omega_c: Control Rabi frequency (> 0)

    Returns:
        (delta, delta_3)
    """
    if not target_ratio > 0 or not math.isfinite(target_ratio):
        raise DomainError(f"target ratio must be finite and > 0, got {target_ratio}",
                          value=target_ratio)
    if not omega_c > 0:
        raise DomainError(f"inverse design needs omega_c > 0, got {omega_c}", value=omega_c)

    delta = Branch(branch).sign * omega_c / math.sqrt(target_ratio)
    delta_3 = control_detuning_for(delta, omega_c)
    logger.debug(f"Designed delta={delta!r}, delta_3={delta_3!r} for R={target_ratio!r}")
    return delta, delta_3
