"""Numerical kernels module"""
from src.numerics.kernels import (
    EigenResult,
    symmetric_eigen,
    largest_eigenvalue,
    zero_threshold,
    min_norm_least_squares,
    log_abs_det,
    solve_spd,
)

__all__ = [
    "EigenResult",
    "symmetric_eigen",
    "largest_eigenvalue",
    "zero_threshold",
    "min_norm_least_squares",
    "log_abs_det",
    "solve_spd"
]
