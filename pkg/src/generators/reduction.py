# src/generators/reduction.py
from __future__ import annotations
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Tuple

from errors import ConstraintError
from graphs.graph import Graph, ThresholdedInstance, Vertex, VertexSet


@dataclass(frozen=True)
class ReductionOutput:
    instance: ThresholdedInstance
    gadget_map: Dict[Tuple[Vertex, Vertex], VertexSet]
    source_vertices: VertexSet


def gadget_name(u: Vertex, v: Vertex, i: int) -> str:
    return f"k_{u}_{v}_{i}"


def vc_reduction(cubic: Graph) -> ReductionOutput:
    """
    Chordal threshold instance whose dyn equals the vertex cover number of
    the cubic input: the source vertices form a clique with threshold 3n+3,
    and every edge uv gets a clique of n threshold-1 vertices joined to u and v.
    """
    bad = [u for u in cubic.vertices if cubic.degree(u) != 3]
    if bad:
        raise ConstraintError(f"reduction needs a cubic graph; degree != 3 at: {', '.join(bad)}")

    n = cubic.n
    sources = list(cubic.vertices)
    vertices: List[Vertex] = list(sources)
    pairs: List[Tuple[Vertex, Vertex]] = list(combinations(sources, 2))
    gadget_map: Dict[Tuple[Vertex, Vertex], VertexSet] = {}

    for u, v in cubic.sorted_edges():
        gadget = [gadget_name(u, v, i) for i in range(n)]
        vertices.extend(gadget)
        pairs.extend(combinations(gadget, 2))
        for k in gadget:
            pairs.append((k, u))
            pairs.append((k, v))
        gadget_map[(u, v)] = frozenset(gadget)

    big = 3 * n + 3
    tau = {u: (big if u in cubic else 1) for u in vertices}
    graph = Graph.from_edges(vertices, pairs)
    return ReductionOutput(
        instance=ThresholdedInstance(graph, tau, big),
        gadget_map=gadget_map,
        source_vertices=frozenset(sources),
    )
