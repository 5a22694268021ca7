"""
Cyclic Jacobi eigensolver for small dense real symmetric matrices.
"""
from typing import Optional, Tuple
import math

import numpy as np

from config import config
from utils.errors import ContractViolation, ConvergenceError


def require_symmetric(H: np.ndarray) -> np.ndarray:
    """Return H as a float array, or raise if it is not square and symmetric."""
    A = np.asarray(H, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ContractViolation(f"expected a square matrix, got shape {A.shape}")
    scale = max(1.0, float(np.max(np.abs(A)))) if A.size else 1.0
    if not np.allclose(A, A.T, rtol=0.0, atol=1e-12 * scale):
        raise ContractViolation("matrix is not symmetric")
    return A


def off_diagonal_norm(A: np.ndarray) -> float:
    """Frobenius norm of the off-diagonal part."""
    upper = np.triu(A, 1)
    return math.sqrt(2.0 * float(np.sum(upper * upper)))


def jacobi_eigh(H: np.ndarray, tol: Optional[float] = None,
                max_sweeps: Optional[int] = None) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigen-decomposition by cyclic Jacobi rotations.

    Args:
        H: Real symmetric N x N matrix
        tol: Stop when the off-diagonal Frobenius norm drops below this
        max_sweeps: Maximum number of full (p, q) sweeps

    Returns:
        (eigenvalues ascending, eigenvectors as columns)

    Raises:
        ConvergenceError: off-diagonal norm still above tol after max_sweeps
    """
    tol = config.diagnostics.jacobi_tol if tol is None else tol
    max_sweeps = config.diagnostics.jacobi_max_sweeps if max_sweeps is None else max_sweeps

    A = require_symmetric(H).copy()
    n = A.shape[0]
    V = np.eye(n)

    off = off_diagonal_norm(A)
    sweeps = 0
    while off >= tol:
        if sweeps == max_sweeps:
            raise ConvergenceError(sweeps, off)
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                # A <- J^T A J, columns then rows
                col_p = A[:, p].copy()
                col_q = A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p = A[p, :].copy()
                row_q = A[q, :].copy()
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, q] = A[q, p] = 0.0

                vec_p = V[:, p].copy()
                vec_q = V[:, q].copy()
                V[:, p] = c * vec_p - s * vec_q
                V[:, q] = s * vec_p + c * vec_q
        off = off_diagonal_norm(A)

    w = np.diag(A).copy()
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order]


def jacobi_eigenvalues(H: np.ndarray, tol: Optional[float] = None,
                       max_sweeps: Optional[int] = None) -> np.ndarray:
    """Eigenvalues only, ascending."""
    return jacobi_eigh(H, tol, max_sweeps)[0]
