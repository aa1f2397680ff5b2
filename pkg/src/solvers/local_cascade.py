# src/solvers/local_cascade.py
from __future__ import annotations
import math
from dataclasses import dataclass, field, replace
from itertools import combinations, permutations, product
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from errors import InputError
from graphs.graph import Vertex, VertexSet

INFEASIBLE = math.inf

Value = Union[int, float]


@dataclass(frozen=True)
class LocalCascade:
    """
    DP state of one layer: seeds X on the boundary B, an activation order of
    B with X first, and the help rho each remaining boundary vertex receives
    from outside the layer.

    rho is stored as (vertex, help) pairs following `order`.
    """
    layer: int
    X: FrozenSet[Vertex]
    order: Tuple[Vertex, ...]
    rho: Tuple[Tuple[Vertex, int], ...] = ()

    def __post_init__(self):
        head = self.order[: len(self.X)]
        if set(head) != set(self.X):
            raise InputError("local cascade order must list X first")
        rest = tuple(v for v, _ in self.rho)
        if rest != self.order[len(self.X):]:
            raise InputError("rho must be defined exactly on the boundary outside X")
        if any(h < 0 for _, h in self.rho):
            raise InputError("rho values must be non-negative")

    @property
    def boundary(self) -> VertexSet:
        return frozenset(self.order)

    def help(self) -> Dict[Vertex, int]:
        return dict(self.rho)


def cap_local_cascade(lc: LocalCascade, tau: Mapping[Vertex, int]) -> LocalCascade:
    """rho(u) -> max(0, min(rho(u), tau(u))); the threshold test cannot tell them apart."""
    capped = tuple((v, max(0, min(h, tau[v]))) for v, h in lc.rho)
    if capped == lc.rho:
        return lc
    return replace(lc, rho=capped)


def enumerate_local_cascades(
    boundary: Sequence[Vertex],
    n: int,
    tau: Mapping[Vertex, int],
    layer: int = 1,
    capped: bool = True,
) -> List[LocalCascade]:
    """
    Every (X, order, rho) over `boundary`, which must be given in canonical
    order. X by size then lexicographically, orders lexicographically, rho
    lexicographically. Capped help runs over 0..max(0, tau), uncapped over 0..n.
    """
    B = list(boundary)
    if not B:
        raise InputError("local cascades need a non-empty boundary")

    out: List[LocalCascade] = []
    for size in range(len(B) + 1):
        for X in combinations(B, size):
            rest = [v for v in B if v not in X]
            for head in permutations(X):
                for tail in permutations(rest):
                    ranges = [
                        range(max(0, tau[v]) + 1) if capped else range(n + 1)
                        for v in tail
                    ]
                    for helps in product(*ranges):
                        out.append(LocalCascade(
                            layer=layer,
                            X=frozenset(X),
                            order=head + tail,
                            rho=tuple(zip(tail, helps)),
                        ))
    return out


# ----------------------------
# Backpointers
# ----------------------------
@dataclass(frozen=True)
class BaseChoice:
    """Layer 1: the chosen Y_1 inside V_1 minus B_1."""
    Y: VertexSet


@dataclass(frozen=True)
class TransitionChoice:
    X_double_prime: VertexSet
    boundary_Y: VertexSet
    joint_order: Tuple[Vertex, ...]
    predecessor: LocalCascade


Choice = Union[BaseChoice, TransitionChoice]


@dataclass(frozen=True)
class Cell:
    value: Value
    back: Optional[Choice] = None

    @property
    def feasible(self) -> bool:
        return self.value != INFEASIBLE


@dataclass
class DPTable:
    """Cells of one layer. Filled once by the solver, read-only afterwards."""
    layer: int
    cells: Dict[LocalCascade, Cell] = field(default_factory=dict)
    sealed: bool = False

    def put(self, lc: LocalCascade, cell: Cell) -> None:
        if self.sealed:
            raise RuntimeError(f"table of layer {self.layer} is sealed")
        self.cells[lc] = cell

    def seal(self) -> "DPTable":
        self.sealed = True
        return self

    def cell(self, lc: LocalCascade) -> Cell:
        return self.cells.get(lc, Cell(INFEASIBLE))

    def value(self, lc: LocalCascade) -> Value:
        return self.cell(lc).value

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[LocalCascade]:
        return iter(self.cells)
