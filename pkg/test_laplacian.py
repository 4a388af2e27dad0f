"""
Tests for the clique, star and Zhou Laplacians
"""
import numpy as np
import pytest

from src.hypergraph import Hypergraph, compute_degrees, connected_components
from src.laplacian import (
    LaplacianFactory,
    clique_expansion,
    clique_graph,
    normalized_graph_laplacian,
    star_expansion,
    zhou_laplacian,
)
from src.utils.errors import ConfigurationError

TRIANGLE = np.eye(3) - np.ones((3, 3)) / 3
BUILDERS = {"zhou": zhou_laplacian, "clique": clique_expansion, "star": star_expansion}


def random_hypergraph(rng, n: int) -> Hypergraph:
    edges = []
    for _ in range(int(rng.integers(1, 2 * n))):
        size = int(rng.integers(2, min(5, n) + 1))
        edges.append(rng.choice(n, size=size, replace=False).tolist())
    weights = rng.uniform(0.1, 2.0, size=len(edges))
    return Hypergraph.from_edges(n, edges, weights)


def random_graph_edges(rng, n: int):
    """Spanning path plus random extra pairs, so no vertex is isolated"""
    order = rng.permutation(n)
    pairs = {tuple(sorted((int(order[i]), int(order[i + 1])))) for i in range(n - 1)}
    for _ in range(n):
        u, v = rng.choice(n, size=2, replace=False)
        pairs.add(tuple(sorted((int(u), int(v)))))
    return sorted(pairs)


def test_single_hyperedge():
    g = Hypergraph.from_edges(3, [[0, 1, 2]])
    np.testing.assert_allclose(zhou_laplacian(g).entries, TRIANGLE, atol=1e-12)
    np.testing.assert_allclose(star_expansion(g).entries, TRIANGLE, atol=1e-12)

    clique = clique_expansion(g).entries
    np.testing.assert_allclose(np.diag(clique), [1.0, 1.0, 1.0])
    np.testing.assert_allclose(clique[~np.eye(3, dtype=bool)], -0.5)


def test_clique_weights_add_up():
    g = Hypergraph.from_edges(2, [[0, 1], [0, 1]], weights=[0.4, 0.6])
    assert clique_graph(g).adjacency[0, 1] == pytest.approx(1.0)


def test_clique_graph_of_two_uniform_hypergraph():
    rng = np.random.default_rng(0)
    pairs = random_graph_edges(rng, 7)
    weights = rng.uniform(0.5, 3.0, size=len(pairs))
    adjacency = np.zeros((7, 7))
    for (u, v), w in zip(pairs, weights):
        adjacency[u, v] = adjacency[v, u] = w
    g = Hypergraph.from_edges(7, pairs, weights)
    np.testing.assert_allclose(clique_graph(g).adjacency, adjacency)


def test_star_is_block_diagonal_for_disjoint_hyperedges():
    g = Hypergraph.from_edges(5, [[0, 1], [2, 3, 4]], weights=[0.3, 2.0])
    entries = star_expansion(g).entries
    np.testing.assert_array_equal(entries[:2, 2:], 0.0)
    np.testing.assert_array_equal(entries[2:, :2], 0.0)


def test_isolated_vertex_has_identity_row():
    g = Hypergraph.from_edges(4, [[0, 1, 2]])
    for builder in BUILDERS.values():
        entries = builder(g).entries
        np.testing.assert_array_equal(entries[3], [0.0, 0.0, 0.0, 1.0])


def test_two_uniform_reduction():
    rng = np.random.default_rng(2024)
    for _ in range(50):
        n = int(rng.integers(3, 15))
        pairs = random_graph_edges(rng, n)
        adjacency = np.zeros((n, n))
        for u, v in pairs:
            adjacency[u, v] = adjacency[v, u] = 1.0
        g = Hypergraph.from_edges(n, pairs)
        np.testing.assert_allclose(
            zhou_laplacian(g).entries, 0.5 * normalized_graph_laplacian(adjacency), atol=1e-10
        )


def test_spectral_invariants():
    rng = np.random.default_rng(99)
    for _ in range(100):
        n = int(rng.integers(3, 51))
        g = random_hypergraph(rng, n)
        for name, builder in BUILDERS.items():
            entries = builder(g).entries
            np.testing.assert_allclose(entries, entries.T, atol=1e-10)
            values = np.linalg.eigvalsh(entries)
            assert values.min() >= -1e-8
            upper = 2.0 if name == "clique" else 1.0
            assert values.max() <= upper + 1e-8

        sqrt_d = np.sqrt(compute_degrees(g).vertex_degrees)
        assert np.max(np.abs(zhou_laplacian(g).entries @ sqrt_d)) < 1e-8


@pytest.mark.parametrize("scale", [0.01, 7.0, 1000.0])
def test_weight_scale_invariance(scale):
    rng = np.random.default_rng(5)
    g = random_hypergraph(rng, 20)
    scaled = g.with_weights(g.weights * scale)
    for builder in BUILDERS.values():
        np.testing.assert_allclose(builder(scaled).entries, builder(g).entries, atol=1e-10)


@pytest.mark.parametrize("name", sorted(BUILDERS))
def test_relabelling_vertices_permutes_laplacian(name):
    rng = np.random.default_rng(17)
    n = 12
    g = random_hypergraph(rng, n)
    relabel = rng.permutation(n)
    moved = Hypergraph.from_edges(n, [[int(relabel[v]) for v in e] for e in g.hyperedges], g.weights)
    builder = BUILDERS[name]
    np.testing.assert_allclose(builder(moved).entries[np.ix_(relabel, relabel)], builder(g).entries, atol=1e-12)


@pytest.mark.parametrize("name", sorted(BUILDERS))
def test_connected_hypergraph_has_one_zero_eigenvalue(name):
    rng = np.random.default_rng(23)
    for n in (5, 12, 30):
        edges = [list(pair) for pair in random_graph_edges(rng, n)]
        edges += [rng.choice(n, size=3, replace=False).tolist() for _ in range(n // 2)]
        g = Hypergraph.from_edges(n, edges, rng.uniform(0.5, 2.0, size=len(edges)))
        values = np.linalg.eigvalsh(BUILDERS[name](g).entries)
        assert int(np.sum(values <= 1e-8)) == 1


@pytest.mark.parametrize("name", sorted(BUILDERS))
def test_zero_eigenvalues_count_components(name):
    rng = np.random.default_rng(41)
    edges, offset = [], 0
    for size in (4, 5, 3):
        for u, v in random_graph_edges(rng, size):
            edges.append([offset + u, offset + v])
        edges.append((offset + rng.choice(size, size=3, replace=False)).tolist())
        offset += size
    g = Hypergraph.from_edges(offset, edges, rng.uniform(0.5, 2.0, size=len(edges)))
    components, _ = connected_components(g)
    values = np.linalg.eigvalsh(BUILDERS[name](g).entries)
    assert components == 3
    assert int(np.sum(values <= 1e-8)) == components


def test_factory():
    g = Hypergraph.from_edges(3, [[0, 1, 2]])
    laplacian = LaplacianFactory.create_laplacian("Zhou", g)
    assert laplacian.framework == "zhou"
    assert laplacian.size == 3
    assert LaplacianFactory.create_laplacian("star", g).framework == "star"
    assert LaplacianFactory.get_framework_list() == ["zhou", "clique", "star"]
    with pytest.raises(ConfigurationError, match="Unsupported framework"):
        LaplacianFactory.create_laplacian("random-walk", g)
