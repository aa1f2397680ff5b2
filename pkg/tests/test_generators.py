# tests/test_generators.py
from __future__ import annotations

import numpy as np
import pytest

from errors import InputError
from generators.random_instances import generate_cubic, generate_interval_instance
from graphs.graph import connected_components
from intervals.representation import NormalizedRepresentation, realize_graph


def test_interval_generator_is_deterministic():
    a_inst, a_rep = generate_interval_instance(9, 2, 42)
    b_inst, b_rep = generate_interval_instance(9, 2, 42)
    assert a_rep.intervals == b_rep.intervals
    assert a_inst.tau == b_inst.tau
    assert a_inst.graph == b_inst.graph


def test_interval_generator_seed_changes_output():
    outputs = {tuple(sorted(generate_interval_instance(10, 2, s)[1].intervals.items())) for s in range(5)}
    assert len(outputs) > 1


def test_interval_generator_single_vertex():
    instance, rep = generate_interval_instance(1, 3, 0)
    assert rep.intervals == {"v0": (1, 2)}
    assert instance.graph.m == 0
    assert 0 <= instance.tau["v0"] <= 1


def test_interval_generator_output_is_normalized_and_consistent():
    for seed in range(30):
        n = 1 + seed % 12
        instance, rep = generate_interval_instance(n, 3, seed, max_length=1 + seed % 5)
        assert isinstance(rep, NormalizedRepresentation)
        lefts, rights = rep.arrays()
        assert sorted(np.concatenate([lefts, rights]).tolist()) == list(range(1, 2 * n + 1))
        assert realize_graph(rep) == instance.graph
        assert instance.graph.vertices == tuple(f"v{i}" for i in range(n))


def test_interval_generator_threshold_range():
    for seed in range(30):
        t = seed % 4
        instance, _ = generate_interval_instance(10, t, seed)
        assert instance.t == t
        for u in instance.graph.vertices:
            assert 0 <= instance.tau[u] <= min(t, instance.graph.degree(u) + 1)


def test_interval_generator_connected_flag():
    for seed in range(40):
        instance, _ = generate_interval_instance(2 + seed % 11, 2, seed, max_length=seed % 3, connected=True)
        assert len(connected_components(instance.graph)) == 1


@pytest.mark.parametrize("n,t", [(0, 2), (-3, 1), (4, -1)])
def test_interval_generator_rejects_bad_arguments(n, t):
    with pytest.raises(InputError):
        generate_interval_instance(n, t, 0)


def test_cubic_four_is_k4():
    g = generate_cubic(4, 3)
    assert g.vertices == ("u0", "u1", "u2", "u3")
    assert g.m == 6


def test_cubic_generator_is_three_regular_and_deterministic():
    for n in (6, 8, 10):
        for seed in range(5):
            g = generate_cubic(n, seed)
            assert all(g.degree(u) == 3 for u in g.vertices)
            assert g.m == 3 * n // 2
            assert g == generate_cubic(n, seed)


@pytest.mark.parametrize("n", [2, 5, 7])
def test_cubic_generator_rejects_bad_n(n):
    with pytest.raises(InputError):
        generate_cubic(n, 0)
