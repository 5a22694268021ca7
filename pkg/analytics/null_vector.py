"""
Numeric null eigenvector, the oracle for the closed-form dark states.
"""
from typing import Optional

import numpy as np

from config import config


def fix_sign(v: np.ndarray, atol: float = 1e-12) -> np.ndarray:
    """Flip v so its first non-negligible component is positive."""
    nonzero = np.flatnonzero(np.abs(v) > atol)
    if nonzero.size and v[nonzero[0]] < 0:
        return -v
    return v


def numeric_null_eigenvector(H: np.ndarray, tol: Optional[float] = None) -> Optional[np.ndarray]:
    """
    Unit eigenvector of the eigenvalue closest to zero, if it is null.

    Args:
        H: Real symmetric matrix
        tol: Relative tolerance; an eigenvalue counts as zero when
            |lambda| <= tol * ||H||_F

    Returns:
        Sign-fixed unit vector, or None when no eigenvalue is zero

    Raises:
        ContractViolation: H is not symmetric
    """
    from diagnostics.jacobi import jacobi_eigh

    tol = config.analytics.null_tol if tol is None else tol
    w, V = jacobi_eigh(H)
    i = int(np.argmin(np.abs(w)))
    if abs(w[i]) > tol * float(np.linalg.norm(H)):
        return None
    v = V[:, i]
    return fix_sign(v / np.linalg.norm(v))
