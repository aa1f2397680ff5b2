# src/intervals/connectivity.py
from __future__ import annotations
from itertools import combinations
from typing import List, Optional

import networkx as nx

from config import DEFAULT
from errors import BudgetExceeded
from graphs.graph import Graph, VertexSet


def is_clique(graph: Graph) -> bool:
    n = graph.n
    return graph.m == n * (n - 1) // 2


def _full_components(g: nx.Graph, graph: Graph, cut: VertexSet) -> int:
    rest = g.subgraph(u for u in graph.vertices if u not in cut)
    full = 0
    for comp in nx.connected_components(rest):
        touched = set()
        for u in comp:
            touched.update(graph.neighbors(u) & cut)
        if touched == cut:
            full += 1
    return full


def minimal_vertex_cuts_bruteforce(graph: Graph, limit: Optional[int] = None) -> List[VertexSet]:
    """
    All minimal separators by subset enumeration: S qualifies when G - S has
    at least two full components (components adjacent to every vertex of S).
    """
    limit = DEFAULT.cut_enumeration_limit if limit is None else limit
    if graph.n > limit:
        raise BudgetExceeded(f"cut enumeration refused: {graph.n} vertices > {limit}", attempted=graph.n)

    g = graph.to_networkx()
    out: List[VertexSet] = []
    for size in range(0, max(0, graph.n - 1)):
        for combo in combinations(graph.vertices, size):
            cut = frozenset(combo)
            if _full_components(g, graph, cut) >= 2:
                out.append(cut)
    return out


def _disconnects(g: nx.Graph, graph: Graph, removed) -> bool:
    rest = g.subgraph(u for u in graph.vertices if u not in removed)
    return rest.number_of_nodes() > 1 and not nx.is_connected(rest)


def is_t_connected(graph: Graph, t: int, limit: Optional[int] = None) -> bool:
    """|V| > t and no set of fewer than t vertices disconnects the graph."""
    if graph.n <= t:
        return False
    if t <= 0:
        return True

    g = graph.to_networkx()
    if not nx.is_connected(g):
        return False
    if t == 1:
        return True
    if t == 2:
        return not any(True for _ in nx.articulation_points(g))

    limit = DEFAULT.connectivity_limit if limit is None else limit
    if graph.n > limit:
        raise BudgetExceeded(f"connectivity test refused: {graph.n} vertices > {limit}", attempted=graph.n)

    for size in range(1, t):
        for combo in combinations(graph.vertices, size):
            if _disconnects(g, graph, combo):
                return False
    return True
