# src/graphs/hull.py
from __future__ import annotations
import random
from collections import deque
from typing import Collection, Dict, FrozenSet, Iterable, List, Optional, Tuple

from errors import InputError
from utils.priority_queue import PriorityQueue
from .graph import Cascade, ThresholdedInstance, Vertex, VertexSet


def propagate(
    instance: ThresholdedInstance,
    seed: Iterable[Vertex],
    allowed: Optional[Collection[Vertex]] = None,
) -> VertexSet:
    """
    Queue-based activation with per-vertex counters of active neighbours.

    With `allowed` given, the closure is taken in the subgraph induced by
    `allowed` under the original thresholds. Seeds are assumed to lie in it.
    """
    graph = instance.graph
    tau = instance.tau

    active = set(seed)
    q = deque(active)

    pool = graph.vertices if allowed is None else allowed
    for u in pool:
        if u not in active and tau[u] <= 0:
            active.add(u)
            q.append(u)

    counts: Dict[Vertex, int] = {}
    while q:
        u = q.popleft()
        for w in graph.neighbors(u):
            if w in active:
                continue
            if allowed is not None and w not in allowed:
                continue
            c = counts.get(w, 0) + 1
            counts[w] = c
            if c >= tau[w]:
                active.add(w)
                q.append(w)

    return frozenset(active)


def hull(instance: ThresholdedInstance, seed: Iterable[Vertex]) -> VertexSet:
    seed = instance.graph.require_subset(seed, "seed")
    return propagate(instance, seed)


def is_dynamic_monopoly(instance: ThresholdedInstance, seed: Iterable[Vertex]) -> bool:
    return len(hull(instance, seed)) == instance.graph.n


def forced_vertices(instance: ThresholdedInstance) -> VertexSet:
    """Vertices that can only enter a hull through the seed: tau(u) > deg(u)."""
    g = instance.graph
    return frozenset(u for u in g.vertices if instance.tau[u] > g.degree(u))


def activation_order(instance: ThresholdedInstance, seed: Iterable[Vertex]) -> Tuple[Vertex, ...]:
    """
    Seeds in canonical order, then repeatedly the canonically smallest
    vertex that is allowed to activate. Covers exactly hull(seed).
    """
    graph = instance.graph
    tau = instance.tau
    seed = graph.require_subset(seed, "seed")

    order: List[Vertex] = graph.canonical(seed)
    active = set(seed)
    counts: Dict[Vertex, int] = {u: 0 for u in graph.vertices}

    ready: PriorityQueue[Vertex] = PriorityQueue()
    for u in order:
        for w in graph.neighbors(u):
            counts[w] += 1
    for u in graph.vertices:
        if u not in active and counts[u] >= tau[u]:
            ready.push(u, graph.index(u))

    while not ready.empty():
        u, _ = ready.pop()
        active.add(u)
        order.append(u)
        for w in graph.neighbors(u):
            counts[w] += 1
            if w not in active and w not in ready and counts[w] >= tau[w]:
                ready.push(w, graph.index(w))

    return tuple(order)


def find_cascade(instance: ThresholdedInstance, seed: Iterable[Vertex]) -> Optional[Cascade]:
    seed = instance.graph.require_subset(seed, "seed")
    order = activation_order(instance, seed)
    if len(order) != instance.graph.n:
        return None
    return Cascade(order=order, seed=seed)


def verify_cascade(instance: ThresholdedInstance, cascade: Cascade) -> bool:
    graph = instance.graph
    order = tuple(cascade.order)
    if len(order) != graph.n or set(order) != set(graph.vertices):
        raise InputError("cascade order is not a permutation of the vertex set")
    seed = graph.require_subset(cascade.seed, "cascade seed")

    # seed prefix
    if any(u in seed for u in order[len(seed):]):
        return False

    seen = set()
    for u in order:
        if u not in seed:
            support = sum(1 for w in graph.neighbors(u) if w in seen)
            if support < instance.tau[u]:
                return False
        seen.add(u)
    return True


def simulate_activation(
    instance: ThresholdedInstance,
    seed: Iterable[Vertex],
    rng: random.Random,
) -> VertexSet:
    """Random maximal sequence of legal single activations; ends at a fixpoint."""
    graph = instance.graph
    tau = instance.tau
    active = set(graph.require_subset(seed, "seed"))

    while True:
        ready = [
            u for u in graph.vertices
            if u not in active and sum(1 for w in graph.neighbors(u) if w in active) >= tau[u]
        ]
        if not ready:
            return frozenset(active)
        active.add(rng.choice(ready))
