# src/solvers/common.py
from __future__ import annotations
from dataclasses import dataclass, field
from typing import List, Optional, Set

from graphs.graph import Vertex, VertexSet
from .local_cascade import BaseChoice, DPTable, LocalCascade, TransitionChoice


@dataclass
class SolveResult:
    dyn: int
    monopoly: VertexSet
    solver: str = "interval-dp"
    components: int = 1
    tables: List[List[DPTable]] = field(default_factory=list)  # per component, for inspection


def unroll(tables: List[DPTable], final: LocalCascade) -> VertexSet:
    """
    Follow backpointers from a last-layer cell down to layer 1:
    Y_i = Y_{i-1} + X'' + boundary Y, plus the seeds X_k of the final cell.
    """
    out: Set[Vertex] = set(final.X)
    cur: Optional[LocalCascade] = final
    while cur is not None:
        back = tables[cur.layer - 1].cell(cur).back
        if isinstance(back, TransitionChoice):
            out.update(back.X_double_prime)
            out.update(back.boundary_Y)
            cur = back.predecessor
        elif isinstance(back, BaseChoice):
            out.update(back.Y)
            cur = None
        else:
            raise RuntimeError(f"no backpointer for a feasible cell of layer {cur.layer}")
    return frozenset(out)
