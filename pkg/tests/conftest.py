# tests/conftest.py
from __future__ import annotations
import os
import sys
from typing import Dict, Iterable, Optional, Tuple

import pytest

# same path bootstrap as src/main.py
TESTS_DIR = os.path.dirname(os.path.abspath(__file__))
SRC_DIR = os.path.join(os.path.dirname(TESTS_DIR), "src")
if SRC_DIR not in sys.path:
    sys.path.insert(0, SRC_DIR)

from graphs.graph import Graph, ThresholdedInstance
from instances.format import load_instance
from intervals.representation import IntervalRepresentation, realize_graph

CORPUS_DIR = os.path.join(TESTS_DIR, "corpus")


def make_instance(
    vertices: Iterable[str],
    edges: Iterable[Tuple[str, str]],
    tau,
    t: Optional[int] = None,
) -> ThresholdedInstance:
    vertices = list(vertices)
    graph = Graph.from_edges(vertices, edges)
    if isinstance(tau, int):
        tau = {u: tau for u in vertices}
    elif not isinstance(tau, dict):
        tau = dict(zip(vertices, tau))
    return ThresholdedInstance(graph, tau, t)


def interval_instance(intervals: Dict[str, Tuple[int, int]], tau, t: Optional[int] = None):
    rep = IntervalRepresentation(intervals)
    graph = realize_graph(rep)
    if isinstance(tau, int):
        tau = {u: tau for u in graph.vertices}
    return ThresholdedInstance(graph, tau, t), rep


@pytest.fixture
def corpus():
    def path(name: str) -> str:
        return os.path.join(CORPUS_DIR, name)
    return path


@pytest.fixture
def p3():
    return make_instance("abc", [("a", "b"), ("b", "c")], 1)


@pytest.fixture
def p4():
    """Path a-b-c-d as intervals, tau = 2 everywhere, t = 2."""
    doc = load_instance(os.path.join(CORPUS_DIR, "p4.ivl"))
    return doc.instance(), doc.representation()
