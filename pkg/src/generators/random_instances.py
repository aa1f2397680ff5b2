# src/generators/random_instances.py
from __future__ import annotations
import random
from typing import List, Optional, Set, Tuple

import numpy as np

from config import DEFAULT
from errors import InputError
from graphs.graph import Graph, ThresholdedInstance
from intervals.representation import IntervalRepresentation, NormalizedRepresentation, normalize, realize_graph


def generate_interval_instance(
    n: int,
    t: int,
    seed: Optional[int] = None,
    max_length: Optional[int] = None,
    connected: bool = False,
) -> Tuple[ThresholdedInstance, NormalizedRepresentation]:
    """
    Seeded random interval instance, vertices v0..v{n-1}.

    Left endpoints are uniform in [0, n] and lengths uniform in
    [0, max_length], so endpoints collide often. With `connected`, lefts
    are sorted and pulled back to the furthest right end seen so far.
    tau(u) is uniform in 0..min(t, deg(u) + 1): forced, free and
    self-activating vertices all occur.
    """
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    if t < 0:
        raise InputError(f"t must be non-negative, got {t}")
    max_length = DEFAULT.max_interval_length if max_length is None else max_length

    rng = np.random.default_rng(seed)
    lefts = rng.integers(0, n + 1, size=n)
    lengths = rng.integers(0, max_length + 1, size=n)

    if connected:
        lefts = np.sort(lefts)
        reach = lefts[0] + lengths[0]
        for i in range(1, n):
            lefts[i] = min(lefts[i], reach)
            reach = max(reach, lefts[i] + lengths[i])

    rights = lefts + lengths
    names = [f"v{i}" for i in range(n)]
    rep = normalize(IntervalRepresentation({u: (int(l), int(r)) for u, l, r in zip(names, lefts, rights)}))

    graph = realize_graph(rep)
    tau = {u: int(rng.integers(0, min(t, graph.degree(u) + 1) + 1)) for u in graph.vertices}
    return ThresholdedInstance(graph, tau, t), rep


def generate_cubic(n: int, seed: Optional[int] = None) -> Graph:
    """Simple 3-regular graph on u0..u{n-1} from the pairing model, restarting on loops or multi-edges."""
    if n < 4 or n % 2:
        raise InputError(f"cubic graphs need an even n >= 4, got {n}")

    rng = random.Random(seed)
    names = [f"u{i}" for i in range(n)]

    while True:
        points = [v for v in range(n) for _ in range(3)]
        rng.shuffle(points)
        edges: Set[Tuple[int, int]] = set()
        ok = True
        for a, b in zip(points[0::2], points[1::2]):
            pair = (min(a, b), max(a, b))
            if a == b or pair in edges:
                ok = False
                break
            edges.add(pair)
        if ok:
            pairs: List[Tuple[str, str]] = [(names[a], names[b]) for a, b in sorted(edges)]
            return Graph.from_edges(names, pairs)
