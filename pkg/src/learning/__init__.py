"""Spectral clustering, transductive classification and evaluation"""
from src.learning.embedding import (
    Embedding,
    ClusterAssignment,
    spectral_embed,
    canonical_labels,
    kmeans,
    cluster_embedding,
    cluster,
    embedding_residuals,
)
from src.learning.classification import (
    LabelMatrix,
    ScoreMatrix,
    ClassificationResult,
    build_label_matrix,
    predict,
    classify,
    classification_objective,
)
from src.learning.metrics import accuracy, nmi, error_rate

__all__ = [
    "Embedding",
    "ClusterAssignment",
    "spectral_embed",
    "canonical_labels",
    "kmeans",
    "cluster_embedding",
    "cluster",
    "embedding_residuals",
    "LabelMatrix",
    "ScoreMatrix",
    "ClassificationResult",
    "build_label_matrix",
    "predict",
    "classify",
    "classification_objective",
    "accuracy",
    "nmi",
    "error_rate"
]
