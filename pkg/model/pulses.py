"""
Pulse envelopes: time-dependent Rabi frequencies.
"""
from dataclasses import dataclass
from enum import Enum
import math

import numpy as np


class EnvelopeKind(str, Enum):
    GAUSSIAN = "gaussian"
    CONSTANT = "constant"


@dataclass(frozen=True)
class PulseEnvelope:
    """A Rabi frequency Omega(t), Gaussian or constant in time."""
    kind: EnvelopeKind
    peak: float
    center: float = 0.0
    width: float = 1.0

    def __post_init__(self):
        if not math.isfinite(self.peak) or self.peak < 0:
            raise ValueError(f"envelope peak must be finite and >= 0, got {self.peak}")
        if self.kind is EnvelopeKind.GAUSSIAN and not self.width > 0:
            raise ValueError(f"gaussian width must be > 0, got {self.width}")

    @classmethod
    def gaussian(cls, peak: float, center: float, width: float) -> "PulseEnvelope":
        return cls(EnvelopeKind.GAUSSIAN, peak, center, width)

    @classmethod
    def constant(cls, peak: float) -> "PulseEnvelope":
        return cls(EnvelopeKind.CONSTANT, peak)

    def __call__(self, t):
        return envelope_value(self, t)


def envelope_value(env: PulseEnvelope, t):
    """
    Evaluate the envelope at time t.

    Args:
        env: Pulse envelope
        t: Time (scalar or numpy array), units T0

    Returns:
        peak * exp(-(t - center)^2 / width^2) for gaussian, peak for constant
    """
    if env.kind is EnvelopeKind.CONSTANT:
        if np.ndim(t) == 0:
            return env.peak
        return np.full(np.shape(t), env.peak, dtype=float)

    x = (np.asarray(t, dtype=float) - env.center) / env.width
    value = env.peak * np.exp(-x * x)
    return float(value) if np.ndim(t) == 0 else value


def envelope_derivative(env: PulseEnvelope, t):
    """Closed-form dOmega/dt of the envelope."""
    if env.kind is EnvelopeKind.CONSTANT:
        return 0.0 if np.ndim(t) == 0 else np.zeros(np.shape(t))

    shifted = np.asarray(t, dtype=float) - env.center
    value = -2.0 * shifted / env.width ** 2 * envelope_value(env, t)
    return float(value) if np.ndim(t) == 0 else value
