# src/intervals/decomposition.py
from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Tuple

import numpy as np

from graphs.graph import VertexSet
from .representation import NormalizedRepresentation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CutStructure:
    """
    Sweep data of a normalized representation (1-based in the accessors).

    cuts[i - 1] = C_i: vertices whose interval contains the elementary
    segment [i, i + 1]; counts[i - 1] = |C_i|.
    """
    endpoints: Tuple[int, ...]
    cuts: Tuple[VertexSet, ...]
    counts: Tuple[int, ...]
    lefts: Tuple[Tuple[str, int], ...]

    @property
    def n(self) -> int:
        return len(self.endpoints) // 2

    def cut(self, i: int) -> VertexSet:
        return self.cuts[i - 1]

    def count(self, i: int) -> int:
        return self.counts[i - 1]

    def local_minima(self) -> List[int]:
        """Indices i with c_i < min(c_{i-1}, c_{i+1}); the minimal separators sit here."""
        c = self.counts
        return [i for i in range(2, len(c)) if c[i - 1] < min(c[i - 2], c[i])]


def compute_cut_structure(rep: NormalizedRepresentation) -> CutStructure:
    n = rep.n
    lefts, rights = rep.arrays()

    delta = np.zeros(2 * n + 2, dtype=np.int64)
    np.add.at(delta, lefts, 1)
    np.add.at(delta, rights, -1)
    counts = np.cumsum(delta)[1:2 * n]

    # one event per position after normalization
    starts = {int(l): u for u, l in zip(rep.vertices, lefts.tolist())}
    ends = {int(r): u for u, r in zip(rep.vertices, rights.tolist())}
    current = set()
    cuts: List[VertexSet] = []
    for x in range(1, 2 * n):
        if x in starts:
            current.add(starts[x])
        else:
            current.discard(ends[x])
        cuts.append(frozenset(current))

    return CutStructure(
        endpoints=tuple(range(1, 2 * n + 1)),
        cuts=tuple(cuts),
        counts=tuple(int(c) for c in counts),
        lefts=tuple((u, int(l)) for u, l in zip(rep.vertices, lefts.tolist())),
    )


@dataclass(frozen=True)
class Layer:
    index: int
    j: int
    V: VertexSet
    B: VertexSet
    boundary: VertexSet


@dataclass(frozen=True)
class Decomposition:
    t: int
    layer_indices: Tuple[int, ...]
    layers: Tuple[Layer, ...]
    cuts: CutStructure

    @property
    def k(self) -> int:
        return len(self.layers)

    def layer(self, i: int) -> Layer:
        return self.layers[i - 1]


def compute_decomposition(cuts: CutStructure, t: int) -> Decomposition:
    c = cuts.counts
    last = len(c)

    indices = [i for i in range(2, last) if c[i - 1] < min(c[i - 2], c[i], t)]
    indices.append(last)

    layers: List[Layer] = []
    prev_V: FrozenSet[str] = frozenset()
    prev_B: FrozenSet[str] = frozenset()
    for pos, j in enumerate(indices, start=1):
        V = frozenset(u for u, left in cuts.lefts if left <= j)
        B = cuts.cut(j)
        boundary = V if pos == 1 else (V - prev_V) | prev_B
        layers.append(Layer(index=pos, j=j, V=V, B=B, boundary=boundary))
        prev_V, prev_B = V, B

    logger.debug("decomposition t=%d: k=%d, j=%s", t, len(layers), indices)
    return Decomposition(t=t, layer_indices=tuple(indices), layers=tuple(layers), cuts=cuts)
