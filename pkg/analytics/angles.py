"""
Mixing angles of the twofold-manifold dark state and the final population ratio.
"""
from dataclasses import dataclass
import math

from utils.errors import DomainError, UndefinedAngleError


@dataclass(frozen=True)
class MixingAngles:
    """
    theta: transfer angle, rises from 0 to pi/2 during the passage
    phi: manifold angle, fixed by detunings and control field
    alpha: factor modifying tan(theta) relative to the plain Lambda system
    """
    theta: float
    phi: float
    alpha: float


def alpha_factor(delta: float, delta_3: float) -> float:
    """
    alpha = sqrt(1 + D / (D - D3)).

    D = D3 = 0 gives 1 (plain Lambda system); D = D3 != 0 gives +inf.

    Raises:
        DomainError: negative radicand, carrying its value
    """
    gap = delta - delta_3
    if gap == 0:
        return 1.0 if delta == 0 else math.inf
    radicand = 1.0 + delta / gap
    if radicand < 0:
        raise DomainError(f"alpha radicand 1 + D/(D - D3) = {radicand!r} is negative",
                          value=radicand)
    return math.sqrt(radicand)


def mixing_angles(omega_p: float, omega_s: float, delta: float,
                  delta_3: float, omega_c: float) -> MixingAngles:
    """
    Instantaneous mixing angles from Rabi frequencies and detunings.

    Args:
        omega_p: Pump Rabi frequency at this time
        omega_s: Stokes Rabi frequency at this time
        delta: Two-photon detuning D1 - D2
        delta_3: Control detuning
        omega_c: Control Rabi frequency

    Returns:
        MixingAngles with theta = atan2(alpha*Op, Os), phi = atan2(Oc, |D - D3|)
    """
    if omega_p == 0 and omega_s == 0:
        raise UndefinedAngleError("mixing angle undefined: both pump and Stokes are zero")

    alpha = alpha_factor(delta, delta_3)
    if omega_p == 0:
        theta = 0.0
    elif math.isinf(alpha):
        theta = math.pi / 2
    else:
        theta = math.atan2(alpha * omega_p, omega_s)
    phi = math.atan2(omega_c, abs(delta - delta_3))
    return MixingAngles(theta=theta, phi=phi, alpha=alpha)


def population_ratio(phi: float) -> float:
    """
    Final ratio P3/P4 = (cos(phi)/sin(phi))^2.

    Raises:
        DomainError: sin(phi) == 0 (all population ends in |3>)
    """
    s = math.sin(phi)
    if s == 0:
        raise DomainError("population ratio is infinite: sin(phi) = 0, all population in |3>",
                          value=math.inf)
    return (math.cos(phi) / s) ** 2
