"""
Transductive classification by regularized label propagation over a Laplacian
"""
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from config.settings import settings
from src.laplacian.frameworks import LaplacianMatrix
from src.numerics.kernels import solve_spd
from src.utils.errors import ConfigurationError, DataError, ParameterError
from src.utils.logger import app_logger


@dataclass(frozen=True, eq=False)
class LabelMatrix:
    """
    |V| x c seed matrix over {+1, -1, 0}

    A labeled vertex has +1 in its class column and -1 elsewhere; unlabeled rows are 0.
    """
    entries: np.ndarray

    @property
    def num_classes(self) -> int:
        return int(self.entries.shape[1])

    @property
    def labeled(self) -> np.ndarray:
        return np.any(self.entries != 0, axis=1)

    def seeds_per_class(self) -> np.ndarray:
        return np.sum(self.entries > 0, axis=0)


@dataclass(frozen=True, eq=False)
class ScoreMatrix:
    """|V| x c classification scores"""
    entries: np.ndarray


@dataclass(frozen=True, eq=False)
class ClassificationResult:
    scores: ScoreMatrix
    labels: np.ndarray
    lam: float

    @property
    def stationary_scores(self) -> np.ndarray:
        """lambda (L + lambda I)^-1 Y, the zero-gradient point of the regularized objective"""
        return self.lam * self.scores.entries


def build_label_matrix(labels: Sequence[Optional[int]], c: int) -> LabelMatrix:
    """
    Build the seed matrix from a partial labeling

    Args:
        labels: Class id per vertex; None or a negative id marks an unlabeled vertex
        c: Number of classes

    Returns:
        LabelMatrix
    """
    if c < 1:
        raise ParameterError(f"class count must be positive, got {c}")

    entries = np.zeros((len(labels), c))
    for vertex, label in enumerate(labels):
        if label is None or int(label) < 0:
            continue
        label = int(label)
        if label >= c:
            raise DataError(f"vertex {vertex} has class id {label} outside [0, {c})")
        if c > 1:
            entries[vertex, :] = -1.0
        entries[vertex, label] = 1.0
    return LabelMatrix(entries=entries)


def predict(scores) -> np.ndarray:
    """argmax over classes; ties go to the smallest class index"""
    values = scores.entries if isinstance(scores, ScoreMatrix) else np.asarray(scores)
    return np.argmax(values, axis=1)


def classify(l, y: LabelMatrix, lam: float = None) -> ClassificationResult:
    """
    Solve (L + lambda I) F = Y and label every vertex by its best-scoring class

    Args:
        l: LaplacianMatrix
        y: Seed matrix
        lam: Positive trade-off between smoothness and fit to the seeds

    Returns:
        ClassificationResult with F and the predicted labels
    """
    lam = settings.DEFAULT_LAMBDA if lam is None else lam
    if lam is None or not np.isfinite(lam) or lam <= 0:
        raise ParameterError(f"lambda must be a positive real, got {lam}")

    s = l.entries if isinstance(l, LaplacianMatrix) else np.asarray(l, dtype=np.float64)
    if y.entries.shape[0] != s.shape[0]:
        raise DataError(f"label matrix has {y.entries.shape[0]} rows for {s.shape[0]} vertices")

    uninformed = np.flatnonzero(~np.any(y.entries != 0, axis=0))
    if uninformed.size:
        raise ConfigurationError(f"classes {uninformed.tolist()} have no labeled vertex")
    unseeded = np.flatnonzero(y.seeds_per_class() == 0)
    if unseeded.size:
        app_logger.warning(f"[CLASSIFY] classes {unseeded.tolist()} have no positive seed")

    f = solve_spd(s + lam * np.eye(s.shape[0]), y.entries)
    labels = predict(f)
    app_logger.debug(
        f"[CLASSIFY] lambda={lam}: {int(np.sum(y.labeled))} seeds, {y.num_classes} classes"
    )
    return ClassificationResult(scores=ScoreMatrix(entries=f), labels=labels, lam=float(lam))


def classification_objective(l, y: LabelMatrix, f, lam: float) -> float:
    """sum_i f_i^T L f_i + lambda ||f_i - y_i||^2"""
    s = l.entries if isinstance(l, LaplacianMatrix) else np.asarray(l, dtype=np.float64)
    f = np.asarray(f, dtype=np.float64)
    diff = f - y.entries
    return float(np.sum(f * (s @ f)) + lam * np.sum(diff * diff))
