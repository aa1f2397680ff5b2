# tests/test_instances.py
from __future__ import annotations

import pytest

from errors import InputError, ParseError
from generators.random_instances import generate_cubic, generate_interval_instance
from graphs.graph import ThresholdedInstance
from instances.format import (
    GRAPH_HEADER,
    INTERVAL_HEADER,
    emit_instance,
    graph_file,
    interval_file,
    load_instance,
    parse_instance,
)


def interval_text(*body: str) -> str:
    return "\n".join([INTERVAL_HEADER, *body]) + "\n"


def graph_text(*body: str) -> str:
    return "\n".join([GRAPH_HEADER, *body]) + "\n"


def parse_error(text: str) -> ParseError:
    with pytest.raises(ParseError) as info:
        parse_instance(text)
    return info.value


# ----------------------------
# parsing
# ----------------------------
def test_parse_interval_file(corpus):
    doc = load_instance(corpus("p4.ivl"))
    assert doc.kind == "interval"
    assert doc.t == 2
    assert doc.names == ["a", "b", "c", "d"]
    assert doc.representation()["b"] == (2, 5)
    inst = doc.instance()
    assert inst.graph.sorted_edges() == [("a", "b"), ("b", "c"), ("c", "d")]
    assert inst.tau == {"a": 2, "b": 2, "c": 2, "d": 2}


def test_parse_graph_file(corpus):
    doc = load_instance(corpus("k4.grf"))
    assert doc.kind == "graph"
    assert doc.instance().graph.m == 6
    with pytest.raises(InputError):
        doc.representation()


def test_parse_skips_comments_and_blank_lines():
    doc = parse_instance("\n# leading\n" + INTERVAL_HEADER + "\n\n   # indented\ninterval a 1 2 0\n")
    assert doc.names == ["a"]
    assert doc.t is None


def test_missing_t_defaults_to_max_threshold():
    doc = parse_instance(graph_text("vertex a 3", "vertex b -1", "edge a b"))
    assert doc.instance().t == 3


def test_negative_thresholds_are_accepted():
    doc = parse_instance(interval_text("t 1", "interval a 1 2 -4"))
    assert doc.tau() == {"a": -4}


# ----------------------------
# errors carry line and column
# ----------------------------
def test_bad_header():
    err = parse_error("format something-else v1\n")
    assert (err.line, err.column) == (1, 1)


def test_missing_header():
    err = parse_error("# only a comment\n")
    assert err.line == 1
    assert "missing" in str(err)


def test_duplicate_header():
    err = parse_error(interval_text("t 2", INTERVAL_HEADER))
    assert (err.line, err.column) == (3, 1)


def test_unknown_directive():
    err = parse_error(interval_text("t 2", "foo 1"))
    assert (err.line, err.column) == (3, 1)


def test_directive_of_the_other_kind():
    err = parse_error(interval_text("vertex a 1"))
    assert (err.line, err.column) == (2, 1)


def test_missing_threshold():
    err = parse_error(interval_text("interval a 1 3"))
    assert (err.line, err.column) == (2, 15)


def test_too_many_arguments():
    err = parse_error(graph_text("vertex a 1 9"))
    assert (err.line, err.column) == (2, 12)


def test_non_integer_rejected():
    err = parse_error(interval_text("t 1.5"))
    assert (err.line, err.column) == (2, 3)
    err = parse_error(interval_text("interval a x 3 1"))
    assert (err.line, err.column) == (2, 12)


def test_negative_t_rejected():
    err = parse_error(graph_text("t -1", "vertex a 0"))
    assert (err.line, err.column) == (2, 3)


def test_duplicate_t():
    err = parse_error(graph_text("t 1", "t 2"))
    assert err.line == 3


def test_left_after_right():
    err = parse_error(interval_text("interval a 5 2 1"))
    assert (err.line, err.column) == (2, 14)


def test_duplicate_vertex():
    err = parse_error(graph_text("vertex a 1", "vertex b 1", "vertex a 2"))
    assert (err.line, err.column) == (4, 8)
    assert "line 2" in str(err)


def test_edge_forward_reference():
    err = parse_error(graph_text("vertex a 1", "edge a b", "vertex b 1"))
    assert (err.line, err.column) == (3, 8)


def test_loop_and_duplicate_edge():
    assert parse_error(graph_text("vertex a 1", "edge a a")).line == 3
    assert parse_error(graph_text("vertex a 1", "vertex b 1", "edge a b", "edge b a")).line == 5


def test_invalid_name():
    err = parse_error(graph_text("vertex a-b 1"))
    assert (err.line, err.column) == (2, 8)


def test_no_vertices():
    err = parse_error(graph_text("t 2"))
    assert "no vertices" in str(err)


# ----------------------------
# emission
# ----------------------------
def test_emit_reproduces_corpus_file(corpus):
    with open(corpus("p4.ivl"), encoding="utf-8") as f:
        original = f.read()
    doc = parse_instance(original)
    body = [line for line in original.splitlines() if not line.startswith("#")]
    assert emit_instance(doc).splitlines() == body


def test_generated_interval_instance_survives_emit_and_parse():
    for seed in range(10):
        instance, rep = generate_interval_instance(3 + seed, 2, seed)
        text = emit_instance(interval_file(instance, rep))
        doc = parse_instance(text)
        assert emit_instance(doc) == text
        back = doc.instance()
        assert back.graph == instance.graph
        assert back.tau == instance.tau
        assert back.t == instance.t


def test_graph_file_comments_are_emitted_not_parsed():
    cubic = generate_cubic(6, 1)
    inst = ThresholdedInstance(cubic, {u: 2 for u in cubic.vertices}, 2)
    text = emit_instance(graph_file(inst, comments=["source u0 u1", ""]))
    lines = text.splitlines()
    assert lines[:3] == [GRAPH_HEADER, "# source u0 u1", "#"]
    doc = parse_instance(text)
    assert doc.comments == []
    assert doc.instance().graph == cubic


def test_minimal_interval_file():
    doc = parse_instance(interval_text("interval a 1 1 1"))
    inst = doc.instance()
    assert inst.graph.vertices == ("a",)
    assert inst.t == 1
