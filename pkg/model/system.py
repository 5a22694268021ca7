"""
Scenario configuration: every Rabi peak, pulse timing value and detuning that
defines one simulation.
"""
from typing import Any, Dict, Literal, Mapping
import logging

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from model.pulses import PulseEnvelope, EnvelopeKind
from utils.errors import ConfigurationError

logger = logging.getLogger(__name__)


class SystemConfig(BaseModel):
    """
    Parameters of the Lambda system with a 2- or 3-fold final manifold.

    Units: frequencies in 1/T0, times in T0, hbar = 1. Detunings are scalars,
    so they are time-independent by construction. The pump peaks at
    +half_delay and the Stokes pulse at -half_delay (counterintuitive order).
    """
    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    n_levels: Literal[4, 5] = 4
    omega_p_peak: float = Field(4.0, ge=0)
    omega_s_peak: float = Field(4.0, ge=0)
    omega_c: float = Field(0.0, ge=0)
    omega_d: float = Field(0.0, ge=0)
    pulse_width: float = Field(5.0, gt=0)
    half_delay: float = Field(2.5, ge=0)
    delta_1: float = 0.0
    delta_2: float = 0.0
    delta_3: float = 0.0
    delta_4: float = 0.0
    pulse_shape: EnvelopeKind = EnvelopeKind.GAUSSIAN

    @property
    def delta(self) -> float:
        """Two-photon detuning Delta = Delta_1 - Delta_2."""
        return self.delta_1 - self.delta_2

    def pump_envelope(self) -> PulseEnvelope:
        if self.pulse_shape is EnvelopeKind.CONSTANT:
            return PulseEnvelope.constant(self.omega_p_peak)
        return PulseEnvelope.gaussian(self.omega_p_peak, self.half_delay, self.pulse_width)

    def stokes_envelope(self) -> PulseEnvelope:
        if self.pulse_shape is EnvelopeKind.CONSTANT:
            return PulseEnvelope.constant(self.omega_s_peak)
        return PulseEnvelope.gaussian(self.omega_s_peak, -self.half_delay, self.pulse_width)

    @classmethod
    def field_names(cls) -> list:
        return list(cls.model_fields)

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> "SystemConfig":
        """
        Validate a raw mapping into a SystemConfig.

        Raises:
            ConfigurationError: naming the first offending field
        """
        try:
            return cls.model_validate(dict(data))
        except ValidationError as e:
            first = e.errors()[0]
            field = ".".join(str(part) for part in first["loc"]) or None
            raise ConfigurationError(f"{field}: {first['msg']}", field=field) from e

    def with_overrides(self, **updates: Any) -> "SystemConfig":
        """Return a re-validated copy with some fields replaced."""
        data: Dict[str, Any] = self.model_dump()
        data.update(updates)
        return SystemConfig.from_mapping(data)
