"""
Exception hierarchy for the STIRAP toolkit.

``ConfigurationError`` maps to CLI exit code 2; every other ``StirapError``
maps to exit code 3.
"""
from typing import Optional


class StirapError(Exception):
    """Base class for all toolkit errors."""

    def __reduce__(self):
        # Sweep workers send errors back across processes
        return (self.__class__, getattr(self, "_init_args", self.args))


class ConfigurationError(StirapError, ValueError):
    """Invalid scenario configuration or config-file syntax."""

    def __init__(self, message: str, field: Optional[str] = None,
                 line: Optional[int] = None):
        self.field = field
        self.line = line
        self._init_args = (message, field, line)
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class DomainError(StirapError, ValueError):
    """Argument outside the mathematical domain of an operation."""

    def __init__(self, message: str, value: Optional[float] = None):
        self.value = value
        self._init_args = (message, value)
        super().__init__(message)


class SingularInversionError(DomainError):
    """The null condition cannot be inverted for the control detuning."""


class PreconditionError(StirapError, ValueError):
    """A dark-state existence condition does not hold."""

    def __init__(self, message: str, residual: Optional[float] = None):
        self.residual = residual
        self._init_args = (message, residual)
        super().__init__(message)


class ContractViolation(StirapError, ValueError):
    """Caller passed data that breaks a routine's input contract."""


class NumericalError(StirapError, ArithmeticError):
    """A numerical procedure failed or produced untrustworthy output."""


class IntegrationAccuracyError(NumericalError):
    """Norm drift exceeded tolerance during time stepping."""

    def __init__(self, drift: float, step: int, t: float):
        self.drift = drift
        self.step = step
        self.t = t
        self._init_args = (drift, step, t)
        super().__init__(
            f"norm drift {drift:.3e} at step {step} (t={t:.6g}) exceeds tolerance; "
            f"use a smaller dt"
        )


class ConvergenceError(NumericalError):
    """Jacobi rotations did not converge."""

    def __init__(self, sweeps: int, off_norm: float):
        self.sweeps = sweeps
        self.off_norm = off_norm
        self._init_args = (sweeps, off_norm)
        super().__init__(
            f"Jacobi did not converge in {sweeps} sweeps (off-diagonal norm {off_norm:.3e})"
        )


class UndefinedAngleError(NumericalError):
    """Mixing angle undefined because both pulse envelopes vanish."""


class TransferIncompleteError(NumericalError):
    """Population left in |1> and |2> at the end of the run."""

    def __init__(self, residual_population: float, threshold: float):
        self.residual_population = residual_population
        self._init_args = (residual_population, threshold)
        super().__init__(
            f"residual population P1+P2 = {residual_population:.4g} exceeds {threshold:g}; "
            f"adiabatic following broke down"
        )


class ParameterInconsistencyWarning(UserWarning):
    """Configured parameters do not admit the dark state they are meant to use."""
