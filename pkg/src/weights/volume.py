"""
Simplex volume of a hyperedge - Gram, Cayley-Menger and hyperface determinant formulas

All three work in the log domain and subtract log k! before exponentiating,
so large simplex degrees do not overflow.
"""
import numpy as np
import scipy.linalg
from scipy.special import gammaln

from src.hypergraph.generation import as_samples, pairwise_sq_distances
from src.numerics.kernels import log_abs_det
from src.utils.errors import DataError, DegenerateFaceError, DegenerateVolumeError


def simplex_volume_gram(points) -> float:
    """
    Volume of the simplex spanned by k+1 points (one per row)

    Vol = sqrt(|det(G^T G)|) / k!, with column i of G equal to x_0 - x_i.
    """
    points = np.asarray(points, dtype=np.float64)
    k = points.shape[0] - 1
    d = points.shape[1]
    if k < 1:
        return 0.0
    if k > d:
        raise DegenerateVolumeError(f"simplex degree k={k} exceeds dimension d={d}")

    g = (points[0] - points[1:]).T
    sign, logdet = log_abs_det(g.T @ g)
    if sign == 0:
        return 0.0
    return float(np.exp(0.5 * logdet - gammaln(k + 1)))


def raw_volume_gram(x, e) -> float:
    """Gram-determinant volume of hyperedge e"""
    return simplex_volume_gram(as_samples(x).rows(e))


def raw_volume_cayley_menger(d2, k: int) -> float:
    """
    Simplex volume from squared pairwise distances

    Vol = sqrt(|det(P)|) / (2^(k/2) k!), P the bordered Cayley-Menger matrix.
    Distances are rescaled by their maximum before the determinant.

    Args:
        d2: (k+1) x (k+1) squared-distance matrix
        k: Simplex degree

    Returns:
        Non-negative volume
    """
    d2 = np.asarray(d2, dtype=np.float64)
    if d2.shape != (k + 1, k + 1):
        raise DataError(f"expected a {(k + 1, k + 1)} distance matrix, got {d2.shape}")
    if not np.all(np.isfinite(d2)):
        raise DataError("distance matrix has non-finite entries")
    if np.any(d2 < 0):
        raise DataError("distance matrix has negative entries")
    scale = float(np.max(d2)) if d2.size else 0.0
    if np.max(np.abs(d2 - d2.T)) > 1e-12 * max(1.0, scale):
        raise DataError("distance matrix is not symmetric")
    if np.any(np.diag(d2) != 0):
        raise DataError("distance matrix must have a zero diagonal")
    if k < 1 or scale == 0.0:
        return 0.0

    p = np.ones((k + 2, k + 2))
    p[0, 0] = 0.0
    p[1:, 1:] = d2 / scale

    sign, logdet = log_abs_det(p)
    if sign == 0:
        return 0.0
    log_volume = 0.5 * logdet + 0.5 * k * np.log(scale) - 0.5 * k * np.log(2.0) - gammaln(k + 1)
    return float(np.exp(log_volume))


def raw_volume_cm(x, e) -> float:
    """Cayley-Menger volume of hyperedge e; more than d+1 samples are degenerate"""
    samples = as_samples(x)
    k = len(e) - 1
    if k > samples.num_features:
        raise DegenerateVolumeError(f"simplex degree k={k} exceeds dimension d={samples.num_features}")
    return raw_volume_cayley_menger(pairwise_sq_distances(samples, e), k)


def raw_volume_hyperface(a, k: int) -> float:
    """
    Simplex volume from its k+1 hyperface equations

    Row i of a holds (a_i0, a_i1, ..., a_ik) of a_i0 + a_i1 v_1 + ... + a_ik v_k = 0.
    Vol = |det(A)|^k / (k! prod_i det(A_i0)), A_i0 the minor without row i and column 0.
    """
    a = np.asarray(a, dtype=np.float64)
    if a.shape != (k + 1, k + 1):
        raise DataError(f"expected a {(k + 1, k + 1)} coefficient matrix, got {a.shape}")

    sign, logdet = log_abs_det(a)
    if sign == 0:
        # all faces meet in a point
        return 0.0

    log_cofactors = 0.0
    for i in range(k + 1):
        minor = np.delete(np.delete(a, i, axis=0), 0, axis=1)
        minor_sign, minor_logdet = log_abs_det(minor)
        if minor_sign == 0:
            raise DegenerateFaceError(f"cofactor of face {i} vanishes (parallel or degenerate faces)")
        log_cofactors += minor_logdet

    return float(np.exp(k * logdet - gammaln(k + 1) - log_cofactors))


def fit_hyperfaces(points) -> np.ndarray:
    """
    Hyperface coefficient matrix of a full-dimensional simplex

    Args:
        points: (k+1) x k vertex coordinates

    Returns:
        (k+1) x (k+1) matrix; row i is the face opposite vertex i
    """
    points = np.asarray(points, dtype=np.float64)
    k = points.shape[0] - 1
    if points.shape[1] != k:
        raise DataError(f"need {k + 1} points in {k} dimensions, got shape {points.shape}")

    faces = np.zeros((k + 1, k + 1))
    for i in range(k + 1):
        others = np.delete(points, i, axis=0)
        system = np.hstack([np.ones((k, 1)), others])
        basis = scipy.linalg.null_space(system)
        if basis.shape[1] != 1:
            raise DegenerateFaceError(f"face opposite vertex {i} is not a unique hyperplane")
        faces[i] = basis[:, 0]
    return faces


def raw_volume_face(x, e) -> float:
    """
    Hyperface-formula volume of hyperedge e

    The vertices are expressed in an orthonormal basis of their affine hull,
    then the faces are fit and passed to raw_volume_hyperface.
    """
    points = as_samples(x).rows(e)
    k = points.shape[0] - 1
    d = points.shape[1]
    if k < 1:
        return 0.0
    if k > d:
        raise DegenerateVolumeError(f"simplex degree k={k} exceeds dimension d={d}")

    _, r = np.linalg.qr((points[1:] - points[0]).T)
    if log_abs_det(r)[0] == 0:
        return 0.0
    local = np.vstack([np.zeros((1, k)), r.T])
    return raw_volume_hyperface(fit_hyperfaces(local), k)
