"""
Clustering evaluation - accuracy under the best label matching, and NMI
"""
import numpy as np
from scipy.optimize import linear_sum_assignment
from sklearn.metrics import normalized_mutual_info_score
from sklearn.metrics.cluster import contingency_matrix

from src.utils.errors import DataError


def _check_pair(pred, truth):
    pred = np.asarray(pred).reshape(-1)
    truth = np.asarray(truth).reshape(-1)
    if pred.shape != truth.shape:
        raise DataError(f"label vectors differ in length: {pred.size} vs {truth.size}")
    if pred.size == 0:
        raise DataError("metrics need at least one sample")
    return pred, truth


def accuracy(pred, truth) -> float:
    """
    Fraction of agreements under the optimal bijection of cluster ids onto class ids
    """
    pred, truth = _check_pair(pred, truth)
    table = contingency_matrix(truth, pred)
    rows, cols = linear_sum_assignment(table, maximize=True)
    return float(table[rows, cols].sum()) / pred.size


def nmi(pred, truth) -> float:
    """
    Normalized mutual information, I / sqrt(H(pred) H(truth))
    """
    pred, truth = _check_pair(pred, truth)
    return float(normalized_mutual_info_score(truth, pred, average_method="geometric"))


def error_rate(pred, truth) -> float:
    """Fraction of mismatched labels (no relabeling)"""
    pred, truth = _check_pair(pred, truth)
    return float(np.mean(pred != truth))
