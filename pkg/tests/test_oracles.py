# tests/test_oracles.py
from __future__ import annotations
import random
from itertools import combinations

import networkx as nx
import pytest

from conftest import make_instance
from errors import BudgetExceeded, ConstraintError
from generators.random_instances import generate_cubic, generate_interval_instance
from generators.reduction import gadget_name, vc_reduction
from graphs.graph import Graph
from graphs.hull import hull, is_dynamic_monopoly
from intervals.connectivity import is_t_connected
from oracles.brute_force import brute_force_dyn, brute_force_vertex_cover, twin_classes
from oracles.chordal import (
    is_chordal,
    is_perfect_elimination_order,
    maximum_cardinality_search,
    perfect_elimination_order,
)

K4_EDGES = list(combinations("abcd", 2))
K33 = Graph.from_edges("abcxyz", [(u, v) for u in "abc" for v in "xyz"])
PRISM = Graph.from_edges(
    "abcdef",
    [("a", "b"), ("b", "c"), ("a", "c"), ("d", "e"), ("e", "f"), ("d", "f"), ("a", "d"), ("b", "e"), ("c", "f")],
)


def plain_minimum(instance):
    vertices = instance.graph.vertices
    for size in range(len(vertices) + 1):
        for combo in combinations(vertices, size):
            if is_dynamic_monopoly(instance, combo):
                return size
    return None


def random_graph_instance(rng: random.Random, max_n: int):
    n = rng.randint(1, max_n)
    g = nx.gnp_random_graph(n, rng.uniform(0.2, 0.8), seed=rng.randint(0, 10**6))
    names = [f"v{i}" for i in range(n)]
    tau = {u: rng.randint(0, 3) for u in names}
    return make_instance(names, [(names[a], names[b]) for a, b in g.edges()], tau)


# ----------------------------
# brute force dyn
# ----------------------------
def test_brute_force_triangle():
    inst = make_instance("abc", list(combinations("abc", 2)), 2)
    dyn, seed = brute_force_dyn(inst)
    assert dyn == 2
    assert seed == {"a", "b"}


def test_brute_force_path(p4):
    instance, _ = p4
    dyn, seed = brute_force_dyn(instance)
    assert dyn == 3
    assert seed == {"a", "b", "d"}


def test_brute_force_zero_thresholds():
    inst = make_instance("abc", [("a", "b")], 0)
    assert brute_force_dyn(inst) == (0, frozenset())


def test_brute_force_budget():
    names = [f"v{i}" for i in range(10)]
    inst = make_instance(names, list(zip(names, names[1:])), 1)
    with pytest.raises(BudgetExceeded) as info:
        brute_force_dyn(inst, budget=1)
    assert info.value.attempted == 2


def test_brute_force_max_size_gives_up():
    tri = make_instance("abc", list(combinations("abc", 2)), 2)
    assert brute_force_dyn(tri, max_size=1) == (None, None)
    isolated = make_instance("abc", [], 1)
    assert brute_force_dyn(isolated, max_size=2) == (None, None)
    assert brute_force_dyn(isolated, max_size=3)[0] == 3


def test_brute_force_agrees_with_plain_enumeration():
    rng = random.Random(17)
    for _ in range(150):
        inst = random_graph_instance(rng, 8)
        dyn, seed = brute_force_dyn(inst)
        assert dyn == plain_minimum(inst)
        assert len(seed) == dyn
        assert is_dynamic_monopoly(inst, seed)


def test_twin_classes():
    tri = make_instance("abc", list(combinations("abc", 2)), 2)
    assert twin_classes(tri) == [("a", "b", "c")]

    mixed = make_instance("abc", list(combinations("abc", 2)), (2, 1, 2))
    assert twin_classes(mixed) == [("a", "c"), ("b",)]


def test_twin_classes_none_on_path(p4):
    instance, _ = p4
    assert twin_classes(instance) == [("a",), ("b",), ("c",), ("d",)]


# ----------------------------
# vertex cover
# ----------------------------
def test_vertex_cover_examples():
    assert brute_force_vertex_cover(Graph.from_edges("abcd", K4_EDGES)) == 3
    assert brute_force_vertex_cover(K33) == 3
    assert brute_force_vertex_cover(PRISM) == 4
    assert brute_force_vertex_cover(Graph.from_edges("ab", [])) == 0


def test_vertex_cover_budget():
    with pytest.raises(BudgetExceeded):
        brute_force_vertex_cover(PRISM, budget=3)


# ----------------------------
# chordality
# ----------------------------
def test_chordal_examples():
    c4 = Graph.from_edges("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    assert not is_chordal(c4)
    assert perfect_elimination_order(c4) is None
    assert is_chordal(Graph.from_edges("abcd", K4_EDGES))
    assert is_chordal(Graph.from_edges("abcd", [("a", "b"), ("c", "d")]))


def test_maximum_cardinality_search_visits_everything():
    order = maximum_cardinality_search(PRISM)
    assert sorted(order) == sorted(PRISM.vertices)
    assert order[0] == "a"


def test_perfect_elimination_order_checker():
    p3 = Graph.from_edges("abc", [("a", "b"), ("b", "c")])
    assert is_perfect_elimination_order(p3, ["a", "b", "c"])
    assert not is_perfect_elimination_order(p3, ["b", "a", "c"])


def test_chordal_matches_networkx():
    rng = random.Random(23)
    for _ in range(200):
        n = rng.randint(1, 9)
        g = nx.gnp_random_graph(n, rng.uniform(0.2, 0.8), seed=rng.randint(0, 10**6))
        names = [f"v{i}" for i in range(n)]
        graph = Graph.from_edges(names, [(names[a], names[b]) for a, b in g.edges()])
        assert is_chordal(graph) == nx.is_chordal(g)


def test_interval_graphs_are_chordal():
    for seed in range(40):
        instance, _ = generate_interval_instance(3 + seed % 10, 2, seed, max_length=4)
        assert is_chordal(instance.graph)


# ----------------------------
# vertex cover reduction
# ----------------------------
def test_reduction_shape_k4():
    out = vc_reduction(Graph.from_edges("abcd", K4_EDGES))
    inst = out.instance
    assert inst.graph.n == 4 + 4 * 6
    assert out.source_vertices == {"a", "b", "c", "d"}
    assert inst.tau["a"] == 15 and inst.t == 15
    assert inst.tau[gadget_name("a", "b", 0)] == 1
    assert out.gadget_map[("a", "b")] == {gadget_name("a", "b", i) for i in range(4)}
    assert inst.graph.neighbors(gadget_name("a", "b", 2)) >= {"a", "b"}
    assert is_chordal(inst.graph)


def test_reduction_shape_six_vertices():
    for cubic in (K33, PRISM):
        out = vc_reduction(cubic)
        assert out.instance.graph.n == 6 + 6 * 9
        assert out.instance.tau["a"] == 21
        assert is_chordal(out.instance.graph)


def test_reduction_rejects_non_cubic():
    with pytest.raises(ConstraintError):
        vc_reduction(Graph.from_edges("abc", [("a", "b"), ("b", "c")]))


def test_reduction_k4_equals_vertex_cover():
    out = vc_reduction(Graph.from_edges("abcd", K4_EDGES))
    dyn, seed = brute_force_dyn(out.instance)
    assert dyn == 3
    assert hull(out.instance, seed) == set(out.instance.graph.vertices)

    inside, seed = brute_force_dyn(out.instance, within=out.source_vertices)
    assert inside == 3 and seed <= out.source_vertices


def test_reduction_matches_vertex_cover_six():
    for seed in range(10):
        cubic = generate_cubic(6, seed)
        out = vc_reduction(cubic)
        vc = brute_force_vertex_cover(cubic)
        assert brute_force_dyn(out.instance)[0] == vc, seed
        assert brute_force_dyn(out.instance, within=out.source_vertices)[0] == vc


@pytest.mark.slow
def test_reduction_matches_vertex_cover_eight():
    for seed in range(10):
        cubic = generate_cubic(8, seed)
        out = vc_reduction(cubic)
        assert out.instance.graph.n == 8 + 8 * 12
        assert is_chordal(out.instance.graph)
        vc = brute_force_vertex_cover(cubic)
        assert brute_force_dyn(out.instance)[0] == vc, seed
        assert brute_force_dyn(out.instance, within=out.source_vertices)[0] == vc


# ----------------------------
# t-connected instances
# ----------------------------
def test_t_connected_interval_instances_need_at_most_t_seeds():
    checked = 0
    for t in (1, 2, 3):
        for seed in range(60):
            n = 3 + seed % 10
            instance, _ = generate_interval_instance(n, t, 4000 + seed, max_length=n, connected=True)
            if not is_t_connected(instance.graph, t):
                continue
            dyn, _ = brute_force_dyn(instance)
            assert dyn <= t, (t, seed)
            checked += 1
    assert checked >= 10
