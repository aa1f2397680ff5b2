# src/graphs/graph.py
from __future__ import annotations
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

import networkx as nx

from errors import InputError

Vertex = str
VertexSet = FrozenSet[Vertex]
Edge = FrozenSet[Vertex]


@dataclass(frozen=True)
class Graph:
    """
    Finite simple undirected graph over named vertices.

    `vertices` is the canonical vertex order (declaration order of the instance
    file); every deterministic tie-break in the project sorts by it.
    """
    vertices: Tuple[Vertex, ...]
    edges: FrozenSet[Edge]
    _adj: Dict[Vertex, FrozenSet[Vertex]] = field(init=False, repr=False, compare=False)
    _index: Dict[Vertex, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index: Dict[Vertex, int] = {}
        for i, u in enumerate(self.vertices):
            if u in index:
                raise InputError(f"duplicate vertex {u!r}")
            index[u] = i

        adj: Dict[Vertex, set] = {u: set() for u in self.vertices}
        for e in self.edges:
            if len(e) != 2:
                raise InputError(f"loop or malformed edge {sorted(e)!r}")
            u, v = tuple(e)
            if u not in index or v not in index:
                raise InputError(f"edge {u!r}-{v!r} uses an undeclared vertex")
            adj[u].add(v)
            adj[v].add(u)

        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adj", {u: frozenset(nb) for u, nb in adj.items()})

    @classmethod
    def from_edges(cls, vertices: Iterable[Vertex], pairs: Iterable[Tuple[Vertex, Vertex]]) -> "Graph":
        edges = set()
        for u, v in pairs:
            if u == v:
                raise InputError(f"loop at vertex {u!r}")
            e = frozenset((u, v))
            if e in edges:
                raise InputError(f"duplicate edge {u!r}-{v!r}")
            edges.add(e)
        return cls(vertices=tuple(vertices), edges=frozenset(edges))

    # ----------------------------
    # Queries
    # ----------------------------
    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __contains__(self, u: object) -> bool:
        return u in self._index

    def neighbors(self, u: Vertex) -> FrozenSet[Vertex]:
        return self._adj[u]

    def degree(self, u: Vertex) -> int:
        return len(self._adj[u])

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return v in self._adj.get(u, ())

    def index(self, u: Vertex) -> int:
        return self._index[u]

    def canonical(self, members: Iterable[Vertex]) -> List[Vertex]:
        """Members sorted by the canonical vertex order."""
        return sorted(members, key=self._index.__getitem__)

    def mask(self, members: Iterable[Vertex]) -> int:
        out = 0
        for u in members:
            out |= 1 << self._index[u]
        return out

    def require_subset(self, members: Iterable[Vertex], what: str = "set") -> VertexSet:
        members = frozenset(members)
        unknown = [u for u in members if u not in self._index]
        if unknown:
            raise InputError(f"unknown vertex in {what}: {', '.join(sorted(unknown))}")
        return members

    def sorted_edges(self) -> List[Tuple[Vertex, Vertex]]:
        out = []
        for e in self.edges:
            u, v = self.canonical(e)
            out.append((u, v))
        out.sort(key=lambda p: (self._index[p[0]], self._index[p[1]]))
        return out

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(tuple(e) for e in self.edges)
        return g


def induced_subgraph(graph: Graph, keep: Iterable[Vertex]) -> Graph:
    keep = graph.require_subset(keep, "induced subgraph")
    vertices = tuple(u for u in graph.vertices if u in keep)
    edges = frozenset(e for e in graph.edges if e <= keep)
    return Graph(vertices=vertices, edges=edges)


def connected_components(graph: Graph) -> List[VertexSet]:
    """Components ordered by their first vertex in canonical order."""
    comps = [frozenset(c) for c in nx.connected_components(graph.to_networkx())]
    comps.sort(key=lambda c: min(graph.index(u) for u in c))
    return comps


@dataclass(frozen=True)
class ThresholdedInstance:
    """
    A graph with an integer threshold per vertex and the bound t.

    t defaults to max(0, max tau). `bounded` records whether tau(u) <= t holds
    everywhere; the interval DP refuses unbounded instances.
    """
    graph: Graph
    tau: Mapping[Vertex, int]
    t: Optional[int] = None

    def __post_init__(self):
        missing = [u for u in self.graph.vertices if u not in self.tau]
        if missing:
            raise InputError(f"threshold missing for: {', '.join(missing)}")
        extra = [u for u in self.tau if u not in self.graph]
        if extra:
            raise InputError(f"threshold given for unknown vertex: {', '.join(sorted(extra))}")
        object.__setattr__(self, "tau", {u: int(self.tau[u]) for u in self.graph.vertices})
        if self.t is None:
            object.__setattr__(self, "t", max([0, *self.tau.values()]))
        elif self.t < 0:
            raise InputError(f"bound t must be non-negative, got {self.t}")

    @property
    def bounded(self) -> bool:
        return all(tau <= self.t for tau in self.tau.values())

    def violations(self) -> List[Vertex]:
        return [u for u in self.graph.vertices if self.tau[u] > self.t]

    def restrict(self, keep: Iterable[Vertex]) -> "ThresholdedInstance":
        sub = induced_subgraph(self.graph, keep)
        return ThresholdedInstance(sub, {u: self.tau[u] for u in sub.vertices}, self.t)


@dataclass(frozen=True)
class Cascade:
    """Activation order u_1 < ... < u_n; seed vertices come first."""
    order: Tuple[Vertex, ...]
    seed: VertexSet

    def __len__(self) -> int:
        return len(self.order)
