# src/oracles/chordal.py
from __future__ import annotations
from typing import Dict, List, Optional

from graphs.graph import Graph, Vertex
from utils.priority_queue import PriorityQueue


def maximum_cardinality_search(graph: Graph) -> List[Vertex]:
    """
    Visit order of maximum cardinality search: always the unvisited vertex
    with the most visited neighbours, canonical order on ties.
    """
    weight: Dict[Vertex, int] = {u: 0 for u in graph.vertices}
    pq: PriorityQueue[Vertex] = PriorityQueue()
    for u in graph.vertices:
        pq.push(u, (0, graph.index(u)))

    visited: List[Vertex] = []
    done = set()
    while not pq.empty():
        u, _ = pq.pop()
        visited.append(u)
        done.add(u)
        for w in graph.neighbors(u):
            if w in done:
                continue
            weight[w] += 1
            pq.push(w, (-weight[w], graph.index(w)))
    return visited


def is_perfect_elimination_order(graph: Graph, order: List[Vertex]) -> bool:
    """
    `order` eliminates first-to-last. Each vertex's later neighbours must
    be a clique; checking them against the earliest one of them suffices.
    """
    pos = {u: i for i, u in enumerate(order)}
    for u in order:
        later = [w for w in graph.neighbors(u) if pos[w] > pos[u]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        for w in later:
            if w != parent and not graph.has_edge(parent, w):
                return False
    return True


def perfect_elimination_order(graph: Graph) -> Optional[List[Vertex]]:
    order = list(reversed(maximum_cardinality_search(graph)))
    return order if is_perfect_elimination_order(graph, order) else None


def is_chordal(graph: Graph) -> bool:
    return perfect_elimination_order(graph) is not None
