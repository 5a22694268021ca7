"""
Adiabaticity diagnostics: Jacobi eigensolver, eigenvalue spectra, mixing-angle
rate and dark-state fidelity.
"""
from .jacobi import jacobi_eigh, jacobi_eigenvalues, require_symmetric, off_diagonal_norm
from .spectrum import (
    SpectrumSeries,
    AdiabaticityReport,
    transfer_alpha,
    theta_dot,
    theta_dot_series,
    eigen_spectrum,
    nonzero_gaps,
    adiabaticity_report,
    write_spectrum_csv,
    spectrum_header,
)
from .fidelity import darkstate_fidelity

__all__ = [
    'jacobi_eigh', 'jacobi_eigenvalues', 'require_symmetric', 'off_diagonal_norm',
    'SpectrumSeries', 'AdiabaticityReport', 'transfer_alpha', 'theta_dot',
    'theta_dot_series', 'eigen_spectrum', 'nonzero_gaps', 'adiabaticity_report',
    'write_spectrum_csv', 'spectrum_header', 'darkstate_fidelity',
]
