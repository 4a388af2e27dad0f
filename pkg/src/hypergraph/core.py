"""
Hypergraph data model - hyperedges, incidence structure and degrees
"""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
import scipy.sparse
import scipy.sparse.csgraph

from src.utils.errors import HypergraphValidationError


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Hypergraph:
    """
    Weighted hypergraph with optional seed vertex per hyperedge

    Hyperedges are stored as sorted vertex tuples. Construction never
    rejects input; use validate() or ensure_valid() to check invariants.
    """
    num_vertices: int
    hyperedges: Tuple[Tuple[int, ...], ...]
    weights: np.ndarray
    seeds: Tuple[Optional[int], ...] = field(default=())

    def __post_init__(self):
        edges = tuple(tuple(sorted(int(v) for v in e)) for e in self.hyperedges)
        weights = _frozen(np.array(self.weights, dtype=np.float64).reshape(-1))
        seeds = tuple(self.seeds) if self.seeds else (None,) * len(edges)
        seeds = tuple(None if s is None or int(s) < 0 else int(s) for s in seeds)
        object.__setattr__(self, "num_vertices", int(self.num_vertices))
        object.__setattr__(self, "hyperedges", edges)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "seeds", seeds)

    @classmethod
    def from_edges(
        cls,
        num_vertices: int,
        hyperedges: Sequence[Sequence[int]],
        weights: Optional[Sequence[float]] = None,
        seeds: Optional[Sequence[Optional[int]]] = None
    ) -> "Hypergraph":
        """
        Build a hypergraph, defaulting to unit weights and no seeds

        Args:
            num_vertices: Vertex count
            hyperedges: Vertex index collections
            weights: Optional positive weight per hyperedge
            seeds: Optional seed vertex per hyperedge (None or -1 when absent)
        """
        if weights is None:
            weights = np.ones(len(hyperedges))
        return cls(
            num_vertices=num_vertices,
            hyperedges=tuple(tuple(e) for e in hyperedges),
            weights=np.asarray(weights, dtype=np.float64),
            seeds=tuple(seeds) if seeds is not None else ()
        )

    @property
    def num_hyperedges(self) -> int:
        return len(self.hyperedges)

    @property
    def has_seeds(self) -> bool:
        """True when every hyperedge carries a seed vertex"""
        return all(s is not None for s in self.seeds)

    def with_weights(self, weights: Sequence[float]) -> "Hypergraph":
        """Copy of this hypergraph with new hyperedge weights"""
        return Hypergraph(
            num_vertices=self.num_vertices,
            hyperedges=self.hyperedges,
            weights=np.asarray(weights, dtype=np.float64),
            seeds=self.seeds
        )


@dataclass(frozen=True)
class Violation:
    """A single invariant violation"""
    edge_index: Optional[int]
    kind: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate(); empty violations means success"""
    violations: Tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> List[str]:
        return [v.kind for v in self.violations]

    def summary(self) -> str:
        if self.ok:
            return "valid hypergraph"
        return "; ".join(v.message for v in self.violations)


@dataclass(frozen=True, eq=False)
class IncidenceMatrix:
    """Sparse binary |V| x |E| incidence matrix"""
    entries: scipy.sparse.csc_matrix

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    def toarray(self) -> np.ndarray:
        return self.entries.toarray()


@dataclass(frozen=True, eq=False)
class DegreeVectors:
    """Vertex degrees d(v) and hyperedge degrees delta(e)"""
    vertex_degrees: np.ndarray
    edge_degrees: np.ndarray

    def vertex_matrix(self) -> scipy.sparse.dia_matrix:
        """D_v"""
        return scipy.sparse.diags(self.vertex_degrees)

    def edge_matrix(self) -> scipy.sparse.dia_matrix:
        """D_e"""
        return scipy.sparse.diags(self.edge_degrees.astype(np.float64))


def validate(g: Hypergraph) -> ValidationReport:
    """
    Report every invariant violation of a hypergraph

    Never raises on malformed input.

    Args:
        g: Hypergraph to check

    Returns:
        ValidationReport listing violations (empty on success)
    """
    violations: List[Violation] = []

    if g.num_vertices < 0:
        violations.append(Violation(None, "negative vertex count",
                                    f"negative vertex count {g.num_vertices}"))

    if len(g.weights) != len(g.hyperedges):
        violations.append(Violation(
            None, "weight count mismatch",
            f"{len(g.weights)} weights for {len(g.hyperedges)} hyperedges"
        ))
    if len(g.seeds) != len(g.hyperedges):
        violations.append(Violation(
            None, "seed count mismatch",
            f"{len(g.seeds)} seeds for {len(g.hyperedges)} hyperedges"
        ))

    for idx, edge in enumerate(g.hyperedges):
        out_of_range = [v for v in edge if v < 0 or v >= g.num_vertices]
        if out_of_range:
            violations.append(Violation(
                idx, "out-of-range index",
                f"hyperedge {idx}: vertex indices {out_of_range} out of range [0, {g.num_vertices})"
            ))
        if len(set(edge)) != len(edge):
            violations.append(Violation(
                idx, "duplicate vertex",
                f"hyperedge {idx}: duplicate vertex in {list(edge)}"
            ))
        if len(set(edge)) < 2:
            violations.append(Violation(
                idx, "singleton hyperedge",
                f"hyperedge {idx}: fewer than 2 distinct vertices"
            ))
        if idx < len(g.weights):
            weight = g.weights[idx]
            if not np.isfinite(weight):
                violations.append(Violation(
                    idx, "non-finite weight", f"hyperedge {idx}: non-finite weight {weight}"
                ))
            elif weight <= 0:
                violations.append(Violation(
                    idx, "non-positive weight", f"hyperedge {idx}: non-positive weight {weight}"
                ))
        if idx < len(g.seeds):
            seed = g.seeds[idx]
            if seed is not None and seed not in edge:
                violations.append(Violation(
                    idx, "seed not in hyperedge",
                    f"hyperedge {idx}: seed {seed} is not a member"
                ))

    return ValidationReport(tuple(violations))


def ensure_valid(g: Hypergraph) -> Hypergraph:
    """Raise HypergraphValidationError naming the first offending hyperedge"""
    report = validate(g)
    if not report.ok:
        first = report.violations[0]
        raise HypergraphValidationError(
            f"invalid hypergraph ({len(report.violations)} violation(s)): {first.message}"
        )
    return g


def build_incidence(g: Hypergraph) -> IncidenceMatrix:
    """
    Build the binary incidence matrix H

    Args:
        g: Valid hypergraph

    Returns:
        IncidenceMatrix with h(v,e) = 1 iff v in e
    """
    ensure_valid(g)
    rows = [v for edge in g.hyperedges for v in edge]
    cols = [idx for idx, edge in enumerate(g.hyperedges) for _ in edge]
    data = np.ones(len(rows), dtype=np.float64)
    entries = scipy.sparse.csc_matrix(
        (data, (rows, cols)), shape=(g.num_vertices, g.num_hyperedges)
    )
    return IncidenceMatrix(entries=entries)


def compute_degrees(g: Hypergraph) -> DegreeVectors:
    """Vertex degrees (weighted) and hyperedge degrees (cardinality)"""
    incidence = build_incidence(g).entries
    vertex_degrees = np.asarray(incidence @ g.weights).reshape(-1)
    edge_degrees = np.array([len(e) for e in g.hyperedges], dtype=np.int64)
    return DegreeVectors(
        vertex_degrees=_frozen(vertex_degrees),
        edge_degrees=_frozen(edge_degrees)
    )


def connected_components(g: Hypergraph) -> Tuple[int, np.ndarray]:
    """
    Connected components of the hypergraph (through shared hyperedges)

    Returns:
        (component count, component label per vertex)
    """
    incidence = build_incidence(g).entries
    adjacency = (incidence @ incidence.T).tocsr()
    count, labels = scipy.sparse.csgraph.connected_components(adjacency, directed=False)
    return int(count), labels
