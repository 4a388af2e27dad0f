"""
Numerical kernels - symmetric eigensolver, minimum-norm least squares,
log-magnitude determinants and SPD solves

All kernels are dense and pure; they never modify their inputs.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np
import scipy.linalg

from config.settings import settings
from src.utils.errors import ContractError, FactorizationError, ParameterError


@dataclass(frozen=True, eq=False)
class EigenResult:
    """Eigenpairs in ascending eigenvalue order, one eigenvector per column"""
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __len__(self) -> int:
        return int(self.eigenvalues.shape[0])


def _as_symmetric(s, name: str = "matrix") -> np.ndarray:
    """Check symmetry within tolerance and return the exactly symmetrized copy"""
    s = np.asarray(s, dtype=np.float64)
    if s.ndim != 2 or s.shape[0] != s.shape[1]:
        raise ContractError(f"{name} must be square, got shape {s.shape}")
    scale = max(1.0, float(np.max(np.abs(s)))) if s.size else 1.0
    asymmetry = float(np.max(np.abs(s - s.T))) if s.size else 0.0
    if asymmetry > settings.SYMMETRY_ATOL * scale:
        raise ContractError(f"{name} is not symmetric (max asymmetry {asymmetry:.3e})")
    return 0.5 * (s + s.T)


def fix_signs(vectors: np.ndarray) -> np.ndarray:
    """
    Flip columns so each column's largest-magnitude entry is positive

    Ties on magnitude resolve to the lower row index.
    """
    vectors = np.array(vectors, dtype=np.float64, copy=True)
    if vectors.size == 0:
        return vectors
    pivots = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[pivots, np.arange(vectors.shape[1])])
    signs[signs == 0] = 1.0
    return vectors * signs


def symmetric_eigen(s, count: int) -> EigenResult:
    """
    Compute the `count` algebraically smallest eigenpairs of a symmetric matrix

    Args:
        s: Symmetric matrix (within 1e-10)
        count: Number of eigenpairs, 1 <= count <= dimension

    Returns:
        EigenResult with ascending eigenvalues and sign-fixed orthonormal vectors
    """
    s = _as_symmetric(s)
    n = s.shape[0]
    if count < 1 or count > n:
        raise ParameterError(f"count must lie in [1, {n}], got {count}")

    values, vectors = scipy.linalg.eigh(s, subset_by_index=[0, count - 1])
    return EigenResult(eigenvalues=values, eigenvectors=fix_signs(vectors))


def largest_eigenvalue(s) -> float:
    """Largest eigenvalue of a symmetric matrix"""
    s = _as_symmetric(s)
    n = s.shape[0]
    if n == 0:
        return 0.0
    values = scipy.linalg.eigh(s, subset_by_index=[n - 1, n - 1], eigvals_only=True)
    return float(values[0])


def zero_threshold(lambda_max: float) -> float:
    """Eigenvalues with magnitude at or below this value count as zero"""
    return settings.ZERO_EIGEN_RTOL * max(1.0, abs(lambda_max))


def min_norm_least_squares(a, b) -> np.ndarray:
    """
    Minimum-norm minimizer of ||b - a c||

    Args:
        a: d x m matrix
        b: d vector

    Returns:
        m vector c (the pseudo-inverse solution)
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.ndim == 1:
        a = a[:, None]
    if a.shape[1] == 0:
        return np.zeros(0)
    solution, _, _, _ = scipy.linalg.lstsq(a, b, lapack_driver="gelsd")
    return solution


def log_abs_det(m) -> Tuple[int, float]:
    """
    Sign and log-magnitude of a determinant

    The determinant is reported as zero (sign 0, log-magnitude -inf) when it
    falls below DET_RTOL times the Hadamard bound (product of row norms).

    Returns:
        (sign, log|det|)
    """
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ContractError(f"determinant needs a square matrix, got shape {m.shape}")
    if m.shape[0] == 0:
        return 1, 0.0

    row_norms = np.linalg.norm(m, axis=1)
    if np.any(row_norms == 0.0):
        return 0, -np.inf

    sign, logdet = np.linalg.slogdet(m)
    log_bound = float(np.sum(np.log(row_norms)))
    if sign == 0 or logdet - log_bound < np.log(settings.DET_RTOL):
        return 0, -np.inf
    return int(sign), float(logdet)


def solve_spd(a, b) -> np.ndarray:
    """
    Solve a x = b for a symmetric positive-definite a via Cholesky

    Args:
        a: SPD matrix
        b: Right-hand side vector or matrix

    Returns:
        Solution with the shape of b
    """
    a = _as_symmetric(a, name="system matrix")
    b = np.asarray(b, dtype=np.float64)
    try:
        factor = scipy.linalg.cho_factor(a, lower=True, check_finite=True)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise FactorizationError(f"Cholesky factorization failed: {str(e)}") from e
    return scipy.linalg.cho_solve(factor, b)
