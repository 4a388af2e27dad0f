"""
Line-oriented hypergraph serialization

Format:
    #vertices=<n>
    weight<TAB>seed_index<TAB>v1,v2,...,vk      (seed_index = -1 when absent)
"""
import os
from typing import List, Optional

from src.hypergraph.core import Hypergraph, validate
from src.utils.errors import DataError
from src.utils.logger import app_logger

HEADER_PREFIX = "#vertices="


def format_hypergraph(g: Hypergraph) -> str:
    """Serialize a hypergraph to text"""
    lines = [f"{HEADER_PREFIX}{g.num_vertices}"]
    for edge, weight, seed in zip(g.hyperedges, g.weights, g.seeds):
        seed_index = -1 if seed is None else seed
        members = ",".join(str(v) for v in edge)
        lines.append(f"{float(weight)!r}\t{seed_index}\t{members}")
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str, source: str = "<string>") -> Hypergraph:
    """
    Parse the text format

    Args:
        text: Serialized hypergraph
        source: Name used in error messages

    Returns:
        Parsed (unvalidated) Hypergraph
    """
    num_vertices: Optional[int] = None
    edges: List[List[int]] = []
    weights: List[float] = []
    seeds: List[Optional[int]] = []

    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(HEADER_PREFIX):
            try:
                num_vertices = int(line[len(HEADER_PREFIX):])
            except ValueError:
                raise DataError(f"{source}:{line_no}: bad vertex count header '{line}'")
            continue
        if line.startswith("#"):
            continue

        parts = raw.rstrip("\n").split("\t")
        if len(parts) != 3:
            raise DataError(f"{source}:{line_no}: expected 3 tab-separated fields, got {len(parts)}")
        try:
            weight = float(parts[0])
            seed = int(parts[1])
            members = [int(v) for v in parts[2].split(",") if v.strip()]
        except ValueError as e:
            raise DataError(f"{source}:{line_no}: {str(e)}")

        weights.append(weight)
        seeds.append(None if seed < 0 else seed)
        edges.append(members)

    if num_vertices is None:
        raise DataError(f"{source}: missing '{HEADER_PREFIX}<n>' header")

    return Hypergraph.from_edges(num_vertices, edges, weights, seeds)


def write_hypergraph(g: Hypergraph, path: str):
    """Write a hypergraph file"""
    try:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            f.write(format_hypergraph(g))
    except OSError as e:
        raise DataError(f"cannot write hypergraph to {path}: {str(e)}") from e
    app_logger.info(f"Wrote hypergraph ({g.num_hyperedges} hyperedges) to {path}")


def read_hypergraph(path: str) -> Hypergraph:
    """Read a hypergraph file, logging any validation findings"""
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise DataError(f"cannot read hypergraph from {path}: {str(e)}") from e

    g = parse_hypergraph(text, source=path)
    report = validate(g)
    if not report.ok:
        app_logger.warning(f"Hypergraph {path} has violations: {report.summary()}")
    return g
