# src/oracles/brute_force.py
from __future__ import annotations
import logging
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from analytics.metrics import SolveMetrics
from config import DEFAULT
from errors import BudgetExceeded
from graphs.graph import Graph, ThresholdedInstance, Vertex, VertexSet
from graphs.hull import forced_vertices, propagate

logger = logging.getLogger(__name__)


def twin_classes(instance: ThresholdedInstance, within: Optional[Iterable[Vertex]] = None) -> List[Tuple[Vertex, ...]]:
    """
    Vertices with equal closed neighbourhoods and equal thresholds, grouped
    in canonical order. Swapping two members is an automorphism of the instance.
    """
    graph = instance.graph
    pool = graph.vertices if within is None else graph.canonical(graph.require_subset(within, "candidate pool"))

    groups: Dict[Tuple[VertexSet, int], List[Vertex]] = {}
    for u in pool:
        key = (graph.neighbors(u) | {u}, instance.tau[u])
        groups.setdefault(key, []).append(u)
    return [tuple(members) for members in groups.values()]


def _canonical_subsets(pool: List[Vertex], previous: Dict[Vertex, Optional[Vertex]], size: int) -> Iterator[Tuple[Vertex, ...]]:
    """
    Size-`size` subsets of `pool` in lexicographic order where a vertex is
    picked only together with its predecessor in its twin class.
    """
    chosen: List[Vertex] = []
    picked = set()

    def rec(start: int) -> Iterator[Tuple[Vertex, ...]]:
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for j in range(start, len(pool) - (size - len(chosen)) + 1):
            u = pool[j]
            prev = previous[u]
            if prev is not None and prev not in picked:
                continue
            chosen.append(u)
            picked.add(u)
            yield from rec(j + 1)
            chosen.pop()
            picked.discard(u)

    yield from rec(0)


def brute_force_dyn(
    instance: ThresholdedInstance,
    within: Optional[Iterable[Vertex]] = None,
    budget: Optional[int] = None,
    max_size: Optional[int] = None,
    metrics: Optional[SolveMetrics] = None,
) -> Tuple[Optional[int], Optional[VertexSet]]:
    """
    Minimum dynamic monopoly by cardinality-ascending search.

    Forced vertices are always included; the rest is drawn from `within`
    (default: all vertices) up to twin symmetry. Returns the lexicographically
    least witness, or (None, None) when nothing of size <= max_size exists
    inside the pool.
    """
    graph = instance.graph
    budget = DEFAULT.oracle_budget if budget is None else budget
    n = graph.n

    forced = forced_vertices(instance)
    allowed = frozenset(graph.vertices) if within is None else graph.require_subset(within, "candidate pool")
    pool = [u for u in graph.vertices if u in allowed and u not in forced]

    previous: Dict[Vertex, Optional[Vertex]] = {}
    for members in twin_classes(instance, pool):
        previous[members[0]] = None
        for a, b in zip(members, members[1:]):
            previous[b] = a

    if max_size is not None and len(forced) > max_size:
        return None, None
    limit = len(pool) if max_size is None else max_size - len(forced)
    attempted = 0
    for size in range(0, min(limit, len(pool)) + 1):
        for combo in _canonical_subsets(pool, previous, size):
            attempted += 1
            if attempted > budget:
                raise BudgetExceeded(
                    f"oracle budget of {budget} candidate sets exhausted at size {len(forced) + size}",
                    attempted=attempted,
                )
            seed = forced.union(combo)
            if len(propagate(instance, seed)) == n:
                if metrics is not None:
                    metrics.oracle_candidates += attempted
                    metrics.dyn = len(seed)
                logger.info("oracle: dyn=%d after %d candidate sets", len(seed), attempted)
                return len(seed), seed

    if metrics is not None:
        metrics.oracle_candidates += attempted
    return None, None


def brute_force_vertex_cover(graph: Graph, budget: Optional[int] = None) -> int:
    budget = DEFAULT.oracle_budget if budget is None else budget
    edges = [tuple(e) for e in graph.edges]
    attempted = 0
    for size in range(graph.n + 1):
        for combo in combinations(graph.vertices, size):
            attempted += 1
            if attempted > budget:
                raise BudgetExceeded(f"vertex cover budget of {budget} exhausted at size {size}", attempted=attempted)
            cover = set(combo)
            if all(u in cover or v in cover for u, v in edges):
                return size
    return graph.n
