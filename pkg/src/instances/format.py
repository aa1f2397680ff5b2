# src/instances/format.py
"""
Line-oriented instance files.

    format interval-instance v1      | format graph-instance v1
    t INT
    interval NAME LEFT RIGHT TAU     (interval files)
    vertex NAME TAU                  (graph files)
    edge NAME NAME                   (graph files)

'#' starts a comment line; blank lines are ignored.
"""
from __future__ import annotations
import re
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from errors import InputError, ParseError
from graphs.graph import Graph, ThresholdedInstance
from intervals.representation import IntervalRepresentation, realize_graph

INTERVAL_HEADER = "format interval-instance v1"
GRAPH_HEADER = "format graph-instance v1"
HEADERS = {INTERVAL_HEADER: "interval", GRAPH_HEADER: "graph"}

NAME_RE = re.compile(r"[A-Za-z0-9_]+")
INT_RE = re.compile(r"[+-]?[0-9]+")
TOKEN_RE = re.compile(r"\S+")

# directive -> (kinds it is allowed in, number of arguments)
DIRECTIVES = {
    "t": (("interval", "graph"), 1),
    "interval": (("interval",), 4),
    "vertex": (("graph",), 2),
    "edge": (("graph",), 2),
}


@dataclass
class InstanceFile:
    kind: str  # "interval" or "graph"
    t: Optional[int] = None
    intervals: List[Tuple[str, int, int, int]] = field(default_factory=list)
    vertices: List[Tuple[str, int]] = field(default_factory=list)
    edges: List[Tuple[str, str]] = field(default_factory=list)
    comments: List[str] = field(default_factory=list)  # emitted after the header, never parsed back

    @property
    def names(self) -> List[str]:
        if self.kind == "interval":
            return [rec[0] for rec in self.intervals]
        return [rec[0] for rec in self.vertices]

    def graph(self) -> Graph:
        if self.kind == "interval":
            return realize_graph(self.representation())
        return Graph.from_edges(self.names, self.edges)

    def tau(self) -> Dict[str, int]:
        if self.kind == "interval":
            return {name: tau for name, _, _, tau in self.intervals}
        return dict(self.vertices)

    def instance(self) -> ThresholdedInstance:
        return ThresholdedInstance(self.graph(), self.tau(), self.t)

    def representation(self) -> IntervalRepresentation:
        if self.kind != "interval":
            raise InputError("graph files carry no interval representation")
        return IntervalRepresentation({name: (left, right) for name, left, right, _ in self.intervals})


# ----------------------------
# Parsing
# ----------------------------
def _tokens(line: str) -> List[Tuple[str, int]]:
    return [(m.group(0), m.start() + 1) for m in TOKEN_RE.finditer(line)]


def _name(tok: str, col: int, lineno: int) -> str:
    if not NAME_RE.fullmatch(tok):
        raise ParseError(f"invalid name {tok!r}", lineno, col)
    return tok


def _int(tok: str, col: int, lineno: int) -> int:
    if not INT_RE.fullmatch(tok):
        raise ParseError(f"expected an integer, got {tok!r}", lineno, col)
    return int(tok)


def parse_instance(text: str) -> InstanceFile:
    doc: Optional[InstanceFile] = None
    declared: Dict[str, Tuple[int, int]] = {}
    edges_seen = set()
    last_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.rstrip()
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue

        toks = _tokens(line)
        head, col = toks[0]

        if doc is None:
            if stripped not in HEADERS:
                raise ParseError("expected a format header", lineno, col)
            doc = InstanceFile(kind=HEADERS[stripped])
            continue

        if head == "format":
            raise ParseError("duplicate format header", lineno, col)
        if head not in DIRECTIVES:
            raise ParseError(f"unknown directive {head!r}", lineno, col)
        kinds, arity = DIRECTIVES[head]
        if doc.kind not in kinds:
            raise ParseError(f"directive {head!r} not allowed in a {doc.kind} file", lineno, col)
        args = toks[1:]
        if len(args) != arity:
            where = args[arity][1] if len(args) > arity else len(line) + 1
            raise ParseError(f"{head!r} takes {arity} argument(s), got {len(args)}", lineno, where)

        if head == "t":
            if doc.t is not None:
                raise ParseError("duplicate t line", lineno, col)
            value = _int(*args[0], lineno)
            if value < 0:
                raise ParseError(f"t must be non-negative, got {value}", lineno, args[0][1])
            doc.t = value

        elif head in ("interval", "vertex"):
            name = _name(*args[0], lineno)
            if name in declared:
                first = declared[name][0]
                raise ParseError(f"duplicate vertex {name!r} (first declared on line {first})", lineno, args[0][1])
            if head == "interval":
                left = _int(*args[1], lineno)
                right = _int(*args[2], lineno)
                if left > right:
                    raise ParseError(f"left {left} > right {right}", lineno, args[2][1])
                doc.intervals.append((name, left, right, _int(*args[3], lineno)))
            else:
                doc.vertices.append((name, _int(*args[1], lineno)))
            declared[name] = (lineno, args[0][1])

        else:  # edge
            a = _name(*args[0], lineno)
            b = _name(*args[1], lineno)
            for tok, tcol in ((a, args[0][1]), (b, args[1][1])):
                if tok not in declared:
                    raise ParseError(f"edge uses undeclared vertex {tok!r}", lineno, tcol)
            if a == b:
                raise ParseError(f"loop at vertex {a!r}", lineno, args[1][1])
            key = frozenset((a, b))
            if key in edges_seen:
                raise ParseError(f"duplicate edge {a}-{b}", lineno, col)
            edges_seen.add(key)
            doc.edges.append((a, b))

    if doc is None:
        raise ParseError("missing format header", max(1, last_line), 1)
    if not declared:
        raise ParseError("instance declares no vertices", max(1, last_line), 1)
    return doc


# ----------------------------
# Emission
# ----------------------------
def emit_instance(doc: InstanceFile) -> str:
    lines = [INTERVAL_HEADER if doc.kind == "interval" else GRAPH_HEADER]
    lines.extend(f"# {c}" if c else "#" for c in doc.comments)
    if doc.t is not None:
        lines.append(f"t {doc.t}")
    if doc.kind == "interval":
        lines.extend(f"interval {name} {left} {right} {tau}" for name, left, right, tau in doc.intervals)
    else:
        lines.extend(f"vertex {name} {tau}" for name, tau in doc.vertices)
        lines.extend(f"edge {a} {b}" for a, b in doc.edges)
    return "\n".join(lines) + "\n"


def interval_file(instance: ThresholdedInstance, rep: IntervalRepresentation, t: Optional[int] = None) -> InstanceFile:
    t = instance.t if t is None else t
    return InstanceFile(
        kind="interval",
        t=t,
        intervals=[(u, *rep[u], instance.tau[u]) for u in instance.graph.vertices],
    )


def graph_file(instance: ThresholdedInstance, comments: Sequence[str] = ()) -> InstanceFile:
    graph = instance.graph
    return InstanceFile(
        kind="graph",
        t=instance.t,
        vertices=[(u, instance.tau[u]) for u in graph.vertices],
        edges=graph.sorted_edges(),
        comments=list(comments),
    )


def read_text(path: str) -> str:
    """'-' reads standard input."""
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def load_instance(path: str) -> InstanceFile:
    return parse_instance(read_text(path))
