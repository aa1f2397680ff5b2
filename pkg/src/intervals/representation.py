# src/intervals/representation.py
from __future__ import annotations
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Tuple

import numpy as np

from errors import InputError
from graphs.graph import Graph, Vertex

Interval = Tuple[int, int]

LEFT, RIGHT = 0, 1


@dataclass(frozen=True)
class IntervalRepresentation:
    """
    Closed integer interval [left, right] per vertex.

    Mapping order is the canonical vertex order.
    """
    intervals: Mapping[Vertex, Interval]

    def __post_init__(self):
        clean: Dict[Vertex, Interval] = {}
        for u, (left, right) in self.intervals.items():
            left, right = int(left), int(right)
            if left > right:
                raise InputError(f"interval of {u!r} has left {left} > right {right}")
            clean[u] = (left, right)
        object.__setattr__(self, "intervals", clean)

    @property
    def vertices(self) -> Tuple[Vertex, ...]:
        return tuple(self.intervals)

    @property
    def n(self) -> int:
        return len(self.intervals)

    def __getitem__(self, u: Vertex) -> Interval:
        return self.intervals[u]

    def arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        lefts = np.fromiter((iv[0] for iv in self.intervals.values()), dtype=np.int64, count=self.n)
        rights = np.fromiter((iv[1] for iv in self.intervals.values()), dtype=np.int64, count=self.n)
        return lefts, rights


@dataclass(frozen=True)
class NormalizedRepresentation(IntervalRepresentation):
    """The 2n endpoints are pairwise distinct and occupy exactly 1..2n."""

    def __post_init__(self):
        super().__post_init__()
        lefts, rights = self.arrays()
        endpoints = np.sort(np.concatenate([lefts, rights]))
        if not np.array_equal(endpoints, np.arange(1, 2 * self.n + 1)):
            raise InputError("endpoints are not a permutation of 1..2n")
        if np.any(lefts >= rights):
            raise InputError("normalized intervals must have left < right")


def normalize(rep: IntervalRepresentation) -> NormalizedRepresentation:
    """
    Rank transform of all 2n endpoints.

    Equal coordinates: left endpoints before right endpoints, so touching
    closed intervals stay adjacent; same kind breaks by canonical order.
    """
    n = rep.n
    lefts, rights = rep.arrays()

    coords = np.empty(2 * n, dtype=np.int64)
    coords[0::2] = lefts
    coords[1::2] = rights
    kinds = np.tile(np.array([LEFT, RIGHT], dtype=np.int64), n)
    owner = np.repeat(np.arange(n, dtype=np.int64), 2)

    # np.lexsort sorts by the last key first
    events = np.lexsort((owner, kinds, coords))
    ranks = np.empty(2 * n, dtype=np.int64)
    ranks[events] = np.arange(1, 2 * n + 1)

    out = {
        u: (int(ranks[2 * i]), int(ranks[2 * i + 1]))
        for i, u in enumerate(rep.vertices)
    }
    return NormalizedRepresentation(out)


def intersection_pairs(rep: IntervalRepresentation) -> Iterable[Tuple[Vertex, Vertex]]:
    lefts, rights = rep.arrays()
    meet = (lefts[:, None] <= rights[None, :]) & (lefts[None, :] <= rights[:, None])
    rows, cols = np.nonzero(np.triu(meet, k=1))
    names = rep.vertices
    return [(names[a], names[b]) for a, b in zip(rows.tolist(), cols.tolist())]


def realize_graph(rep: IntervalRepresentation) -> Graph:
    """Intersection graph: uv is an edge iff I(u) and I(v) meet."""
    return Graph.from_edges(rep.vertices, intersection_pairs(rep))


def check_matches(rep: IntervalRepresentation, graph: Graph) -> None:
    """Raise InputError unless `rep` is an interval representation of `graph`."""
    if set(rep.vertices) != set(graph.vertices):
        raise InputError("representation and graph have different vertex sets")
    realized = realize_graph(rep)
    if realized.edges != graph.edges:
        raise InputError("representation does not realize the instance graph")
