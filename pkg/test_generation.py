"""
Tests for k-nearest-neighbor hyperedge generation
"""
import numpy as np
import pytest

from src.hypergraph import (
    NeighborhoodSpec,
    SampleMatrix,
    knn_hyperedges,
    multi_k_hyperedges,
    nearest_neighbors,
    pairwise_sq_distances,
    validate,
)
from src.utils.errors import DataError, ParameterError


def test_knn_on_line():
    g = knn_hyperedges(np.array([[0.0], [1.0], [10.0]]), k=1)
    assert g.hyperedges == ((0, 1), (0, 1), (1, 2))
    assert g.seeds == (0, 1, 2)
    np.testing.assert_array_equal(g.weights, [1.0, 1.0, 1.0])
    assert validate(g).ok


def test_knn_full_neighborhood():
    x = np.random.default_rng(3).normal(size=(6, 2))
    g = knn_hyperedges(x, k=5)
    assert all(edge == tuple(range(6)) for edge in g.hyperedges)


def test_knn_square_excludes_diagonal():
    square = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])
    g = knn_hyperedges(square, k=2)
    assert g.hyperedges == ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))


def test_nearest_neighbors_ties_to_lower_index():
    x = np.array([[0.0], [-1.0], [1.0]])
    np.testing.assert_array_equal(nearest_neighbors(x, 1)[0], [1])


def test_k_out_of_range():
    x = np.zeros((3, 2)) + np.arange(3)[:, None]
    with pytest.raises(ParameterError):
        knn_hyperedges(x, k=3)
    with pytest.raises(ParameterError):
        knn_hyperedges(x, k=0)


def test_non_finite_feature_names_sample():
    with pytest.raises(DataError, match="sample 1, column 0"):
        SampleMatrix(np.array([[0.0, 1.0], [np.inf, 1.0]]))


def test_multi_k_single_value_matches_knn():
    x = np.random.default_rng(5).normal(size=(8, 3))
    single = multi_k_hyperedges(x, NeighborhoodSpec(k_list=[1]))
    edges = list(dict.fromkeys(knn_hyperedges(x, 1).hyperedges))
    assert list(single.hyperedges) == edges


def test_multi_k_union_deduplicates():
    x = np.array([[0.0], [1.0], [3.0]])
    g = multi_k_hyperedges(x, NeighborhoodSpec(k_list=[1, 2]))
    assert g.hyperedges == ((0, 1), (1, 2), (0, 1, 2))
    assert g.seeds == (0, 2, 0)


def test_multi_k_identical_sets_collapse():
    x = np.array([[0.0], [1.0], [3.0]])
    g = multi_k_hyperedges(x, NeighborhoodSpec(k_list=[2]))
    assert g.hyperedges == ((0, 1, 2),)


def test_multi_k_rerun_gives_same_unique_edges():
    x = np.random.default_rng(31).normal(size=(25, 3))
    spec = NeighborhoodSpec(k_list=[2, 4, 6])
    first = multi_k_hyperedges(x, spec)
    second = multi_k_hyperedges(x, spec)
    assert sorted(first.hyperedges) == sorted(second.hyperedges)
    assert len(set(first.hyperedges)) == first.num_hyperedges

    union = set()
    for k in spec.k_list:
        union.update(knn_hyperedges(x, k).hyperedges)
    assert set(first.hyperedges) == union


def test_knn_survives_rotation_and_shift():
    rng = np.random.default_rng(8)
    x = rng.normal(size=(30, 4))
    q, _ = np.linalg.qr(rng.normal(size=(4, 4)))
    moved = x @ q.T + rng.normal(size=4)
    for k in (1, 3, 5):
        assert knn_hyperedges(moved, k).hyperedges == knn_hyperedges(x, k).hyperedges


def test_k_list_must_increase():
    x = np.random.default_rng(0).normal(size=(10, 2))
    with pytest.raises(ParameterError):
        multi_k_hyperedges(x, NeighborhoodSpec(k_list=[3, 2]))


def test_pairwise_sq_distances():
    np.testing.assert_allclose(pairwise_sq_distances(np.array([[0.0, 0.0], [3.0, 4.0]])), [[0, 25], [25, 0]])
    np.testing.assert_array_equal(pairwise_sq_distances(np.ones((3, 2))), np.zeros((3, 3)))

    square = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])
    d2 = pairwise_sq_distances(square)
    for row in d2:
        assert sorted(row[row > 0].tolist()) == [1.0, 1.0, 2.0]
    np.testing.assert_allclose(pairwise_sq_distances(square, [0, 3]), [[0, 2], [2, 0]])
