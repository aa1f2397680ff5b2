# src/solvers/definition_oracle.py
from __future__ import annotations
from itertools import combinations
from typing import FrozenSet, Optional

from config import DEFAULT
from errors import BudgetExceeded
from graphs.graph import ThresholdedInstance, Vertex
from intervals.decomposition import Decomposition
from .local_cascade import INFEASIBLE, LocalCascade, Value


def _orderable(instance: ThresholdedInstance, V: FrozenSet[Vertex], lc: LocalCascade, Y: FrozenSet[Vertex]) -> bool:
    """
    Is there an order of V with X + Y first, the boundary in lc.order, and
    every other vertex legally activated inside G[V] (boundary vertices with
    help rho)? Greedy is exact: activation is monotone and only the boundary
    order is prescribed.
    """
    graph = instance.graph
    tau = instance.tau
    rho = lc.help()

    active = set(lc.X) | set(Y)
    inner = [u for u in graph.canonical(V.difference(lc.order)) if u not in active]
    pending = list(lc.order[len(lc.X):])

    while True:
        grown = True
        while grown:
            grown = False
            for u in inner:
                if u not in active and len(graph.neighbors(u) & active) >= tau[u]:
                    active.add(u)
                    grown = True
        if not pending:
            break
        v = pending[0]
        if len(graph.neighbors(v) & active) < tau[v] - rho[v]:
            break
        active.add(v)
        pending.pop(0)

    return len(active) == len(V)


def definition_level_dyn_i(
    instance: ThresholdedInstance,
    decomposition: Decomposition,
    lc: LocalCascade,
    limit: Optional[int] = None,
) -> Value:
    """dyn_i of a local cascade straight from its definition, for small layers."""
    limit = DEFAULT.definition_limit if limit is None else limit
    layer = decomposition.layer(lc.layer)
    if len(layer.V) > limit:
        raise BudgetExceeded(f"definition oracle refused: |V_{lc.layer}| = {len(layer.V)} > {limit}", attempted=len(layer.V))

    t = decomposition.t
    slices = [decomposition.layer(j).boundary for j in range(1, lc.layer + 1)]
    free = instance.graph.canonical(layer.V - layer.B)

    for size in range(len(free) + 1):
        for combo in combinations(free, size):
            Y = frozenset(combo)
            chosen = lc.X | Y
            if any(len(chosen & part) > t for part in slices):
                continue
            if _orderable(instance, layer.V, lc, Y):
                return size
    return INFEASIBLE
