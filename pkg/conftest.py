"""
Shared pytest fixtures
"""
import numpy as np
import pytest
from sklearn.datasets import make_blobs

from config.settings import settings


def separated_blobs(n_samples: int = 60, dimension: int = 10, random_state: int = 0):
    """Three tight Gaussian blobs (std 0.1), centers 20*sqrt(2) apart and away from the origin"""
    centers = 20.0 * np.eye(3, dimension) + 5.0
    x, y = make_blobs(
        n_samples=n_samples, centers=centers, cluster_std=0.1, random_state=random_state
    )
    return x, y.astype(np.int64)


@pytest.fixture
def blobs():
    return separated_blobs()


@pytest.fixture
def blob_files(tmp_path, blobs):
    """Blob features and labels written as CSV files"""
    x, y = blobs
    features = tmp_path / "blobs.csv"
    labels = tmp_path / "blobs.labels"
    np.savetxt(features, x, delimiter=",", fmt="%.10f")
    np.savetxt(labels, y, fmt="%d")
    return features, labels


@pytest.fixture(autouse=True)
def isolated_dirs(tmp_path, monkeypatch):
    """Keep run ledgers and default result files inside the test's temp dir"""
    monkeypatch.setattr(settings, "HISTORY_DIR", str(tmp_path / "history"))
    monkeypatch.setattr(settings, "RESULTS_DIR", str(tmp_path / "results"))
