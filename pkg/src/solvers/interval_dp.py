# src/solvers/interval_dp.py
from __future__ import annotations
import logging
from itertools import combinations, permutations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from analytics.metrics import SolveMetrics
from errors import ConstraintError, InputError
from graphs.graph import ThresholdedInstance, Vertex, VertexSet, connected_components
from graphs.hull import propagate
from intervals.decomposition import Decomposition, compute_cut_structure, compute_decomposition
from intervals.representation import (
    IntervalRepresentation,
    NormalizedRepresentation,
    check_matches,
    normalize,
)
from .common import SolveResult, unroll
from .local_cascade import (
    INFEASIBLE,
    BaseChoice,
    Cell,
    DPTable,
    LocalCascade,
    TransitionChoice,
    Value,
    cap_local_cascade,
    enumerate_local_cascades,
)

logger = logging.getLogger(__name__)

# region, seeds, joint order, first position, outside_of
ProfileKey = Tuple[FrozenSet[Vertex], FrozenSet[Vertex], Tuple[Vertex, ...], int, FrozenSet[Vertex]]


def localized_hull(
    instance: ThresholdedInstance,
    subgraph_vertices: Iterable[Vertex],
    removed: Iterable[Vertex],
    seeds: Iterable[Vertex],
) -> VertexSet:
    """Hull of `seeds` in G[subgraph_vertices - removed] under the original thresholds."""
    graph = instance.graph
    sub = graph.require_subset(subgraph_vertices, "subgraph")
    removed = graph.require_subset(removed, "removed set")
    seeds = graph.require_subset(seeds, "seed")
    if not removed <= sub or not seeds <= sub:
        raise InputError("removed vertices and seeds must lie in the subgraph")
    if seeds & removed:
        raise InputError("a seed vertex cannot be removed")
    return propagate(instance, seeds, allowed=sub - removed)


class _LayerContext:
    """Memoized hulls and help profiles shared by all cells of one layer."""

    def __init__(self, instance: ThresholdedInstance, metrics: Optional[SolveMetrics] = None):
        self.instance = instance
        self.metrics = metrics
        self._hulls: Dict[Tuple[FrozenSet[Vertex], FrozenSet[Vertex]], VertexSet] = {}
        self._profiles: Dict[ProfileKey, Dict[Vertex, int]] = {}

    def hull(self, allowed: FrozenSet[Vertex], seeds: FrozenSet[Vertex]) -> VertexSet:
        key = (allowed, seeds)
        out = self._hulls.get(key)
        if out is None:
            out = propagate(self.instance, seeds, allowed=allowed)
            self._hulls[key] = out
            if self.metrics is not None:
                self.metrics.hull_calls += 1
        return out

    def help_profile(
        self,
        region: FrozenSet[Vertex],
        seeds: FrozenSet[Vertex],
        joint_order: Tuple[Vertex, ...],
        first: int,
        outside_of: FrozenSet[Vertex],
    ) -> Dict[Vertex, int]:
        """
        For every position p >= first of `joint_order`: active neighbours of
        joint_order[p] in the hull of seeds + earlier boundary vertices, taken
        in `region` without joint_order[p:]. Members of `outside_of` only count
        neighbours outside that set.
        """
        key = (region, seeds, joint_order, first, outside_of)
        profile = self._profiles.get(key)
        if profile is not None:
            return profile

        graph = self.instance.graph
        profile = {}
        for p in range(first, len(joint_order)):
            v = joint_order[p]
            allowed = region - frozenset(joint_order[p:])
            active = self.hull(allowed, seeds | frozenset(joint_order[:p]))
            nb = graph.neighbors(v) & active
            if v in outside_of:
                nb = nb - outside_of
            profile[v] = len(nb)
        self._profiles[key] = profile
        return profile


def _supported(ctx: _LayerContext, region: FrozenSet[Vertex], lc: LocalCascade, seeds: FrozenSet[Vertex]) -> bool:
    """Every boundary vertex outside X sees tau - rho active neighbours at its turn."""
    tau = ctx.instance.tau
    profile = ctx.help_profile(region, seeds, lc.order, len(lc.X), frozenset())
    return all(profile[v] >= tau[v] - h for v, h in lc.rho)


def base_case(
    instance: ThresholdedInstance,
    decomposition: Decomposition,
    lc: LocalCascade,
    metrics: Optional[SolveMetrics] = None,
    ctx: Optional[_LayerContext] = None,
) -> Tuple[Value, Optional[BaseChoice]]:
    """
    Smallest Y_1 in V_1 - B_1 with |X| + |Y_1| <= t such that B_1 + Y_1 is a
    dynamic monopoly of G_1 and every boundary vertex outside X gets enough
    support inside G_1 when the later boundary vertices are removed.
    Candidates run by size, then lexicographically, so the witness is the
    least one.
    """
    if lc.layer != 1:
        raise InputError(f"base case needs a layer-1 local cascade, got layer {lc.layer}")
    ctx = ctx or _LayerContext(instance, metrics)

    layer = decomposition.layer(1)
    V1, B1 = layer.V, layer.B
    free = instance.graph.canonical(V1 - B1)
    room = decomposition.t - len(lc.X)

    for size in range(0, min(room, len(free)) + 1):
        for combo in combinations(free, size):
            Y = frozenset(combo)
            if ctx.hull(V1, B1 | Y) != V1:
                continue
            if _supported(ctx, V1, lc, lc.X | Y):
                return size, BaseChoice(Y=Y)
    return INFEASIBLE, None


def _extensions(fixed: Tuple[Vertex, ...], free: Sequence[Vertex]) -> List[Tuple[Vertex, ...]]:
    """All orders of fixed + free that keep `fixed` in its given relative order."""
    keep = set(fixed)
    out = []
    for perm in permutations(tuple(fixed) + tuple(free)):
        if tuple(v for v in perm if v in keep) == fixed:
            out.append(perm)
    return out


def transition(
    instance: ThresholdedInstance,
    decomposition: Decomposition,
    i: int,
    lc: LocalCascade,
    prev_table: DPTable,
    metrics: Optional[SolveMetrics] = None,
    ctx: Optional[_LayerContext] = None,
) -> Tuple[Value, Optional[TransitionChoice]]:
    """
    Best triple (X'', boundary Y, joint order) for a cell of layer i > 1.

    X'' are new seeds on B_{i-1} - B_i, boundary Y new seeds strictly inside
    the slice, and the joint order ranks B_{i-1} + B_i with all seeds first
    and extends the order of `lc`. Ties break on
    (value, mask X'', mask boundary Y, canonical positions of the joint order).
    """
    if i < 2 or lc.layer != i:
        raise InputError(f"transition needs a local cascade of layer {i} > 1")
    ctx = ctx or _LayerContext(instance, metrics)
    graph = instance.graph
    tau = instance.tau

    layer = decomposition.layer(i)
    B_i = layer.B
    B_prev = decomposition.layer(i - 1).B
    region = layer.boundary
    both = B_i | B_prev

    leaving = graph.canonical(B_prev - B_i)
    interior = graph.canonical(region - both)
    room = decomposition.t - len(lc.X)
    rho_i = lc.help()

    x_count = len(lc.X)
    head_fixed = lc.order[:x_count]
    tail_fixed = lc.order[x_count:]
    pending_here = [v for v in tail_fixed if v not in B_prev]

    best_key = None
    best: Tuple[Value, Optional[TransitionChoice]] = (INFEASIBLE, None)

    for x2_size in range(0, min(room, len(leaving)) + 1):
        for x2 in combinations(leaving, x2_size):
            X2 = frozenset(x2)
            for y_size in range(0, min(room - x2_size, len(interior)) + 1):
                for y in combinations(interior, y_size):
                    dY = frozenset(y)
                    if ctx.hull(region, both | dY) != region:
                        continue

                    seeds = lc.X | X2 | dY
                    heads = _extensions(head_fixed, x2)
                    tails = _extensions(tail_fixed, [v for v in leaving if v not in X2])
                    for head in heads:
                        for tail in tails:
                            joint = head + tail
                            if metrics is not None:
                                metrics.transition_triples += 1

                            h = ctx.help_profile(region, seeds, joint, len(head), B_prev)
                            if any(h[v] < tau[v] - rho_i[v] for v in pending_here):
                                continue

                            prev_order = tuple(v for v in joint if v in B_prev)
                            prev_X = frozenset(prev_order[: x2_size + len(lc.X & B_prev)])
                            prev_rho = tuple(
                                (v, rho_i.get(v, 0) + h[v])
                                for v in prev_order[len(prev_X):]
                            )
                            pred = cap_local_cascade(
                                LocalCascade(layer=i - 1, X=prev_X, order=prev_order, rho=prev_rho),
                                tau,
                            )
                            value = y_size + x2_size + prev_table.value(pred)
                            if value == INFEASIBLE:
                                continue

                            key = (value, graph.mask(X2), graph.mask(dY), tuple(graph.index(v) for v in joint))
                            if best_key is None or key < best_key:
                                best_key = key
                                best = (value, TransitionChoice(
                                    X_double_prime=X2,
                                    boundary_Y=dY,
                                    joint_order=joint,
                                    predecessor=pred,
                                ))
    return best


def build_tables(
    instance: ThresholdedInstance,
    decomposition: Decomposition,
    metrics: Optional[SolveMetrics] = None,
) -> List[DPTable]:
    """Fill and seal one table per layer; layer i only reads the sealed table of layer i - 1."""
    graph = instance.graph
    tables: List[DPTable] = []

    for layer in decomposition.layers:
        ctx = _LayerContext(instance, metrics)
        table = DPTable(layer=layer.index)
        cascades = enumerate_local_cascades(graph.canonical(layer.B), graph.n, instance.tau, layer=layer.index)
        for lc in cascades:
            if layer.index == 1:
                value, back = base_case(instance, decomposition, lc, metrics, ctx)
            else:
                value, back = transition(instance, decomposition, layer.index, lc, tables[-1], metrics, ctx)
            table.put(lc, Cell(value=value, back=back))
        tables.append(table.seal())

        if metrics is not None:
            metrics.record_layer(len(layer.B), len(table))
        logger.debug("layer %d/%d: |B|=%d, %d cells", layer.index, decomposition.k, len(layer.B), len(table))

    return tables


def final_cells(decomposition: Decomposition) -> Tuple[LocalCascade, LocalCascade]:
    """The two last-layer cells of the final combination: (B_k seeded, B_k unseeded with no help)."""
    last = decomposition.layer(decomposition.k)
    if len(last.B) != 1:
        raise RuntimeError(f"last layer boundary must be a single vertex, got {sorted(last.B)}")
    (b,) = tuple(last.B)
    seeded = LocalCascade(layer=last.index, X=frozenset({b}), order=(b,), rho=())
    unseeded = LocalCascade(layer=last.index, X=frozenset(), order=(b,), rho=((b, 0),))
    return seeded, unseeded


def combine(tables: List[DPTable], decomposition: Decomposition) -> Tuple[Value, LocalCascade]:
    """min(1 + seeded cell, unseeded cell); the unseeded cell wins ties."""
    seeded, unseeded = final_cells(decomposition)
    last = tables[-1]
    with_b = 1 + last.value(seeded)
    without_b = last.value(unseeded)
    if without_b <= with_b:
        return without_b, unseeded
    return with_b, seeded


def split_components(
    instance: ThresholdedInstance,
    representation: IntervalRepresentation,
) -> List[Tuple[ThresholdedInstance, NormalizedRepresentation]]:
    out = []
    for comp in connected_components(instance.graph):
        sub = instance.restrict(comp)
        sub_rep = normalize(IntervalRepresentation({u: representation[u] for u in sub.graph.vertices}))
        out.append((sub, sub_rep))
    return out


def solve_component(
    instance: ThresholdedInstance,
    rep: NormalizedRepresentation,
    metrics: Optional[SolveMetrics] = None,
) -> Tuple[int, VertexSet, List[DPTable]]:
    decomposition = compute_decomposition(compute_cut_structure(rep), instance.t)
    tables = build_tables(instance, decomposition, metrics)
    value, final = combine(tables, decomposition)
    if value == INFEASIBLE:
        raise RuntimeError("final combination is infeasible; the full vertex set is always a monopoly")
    monopoly = unroll(tables, final)
    return int(value), monopoly, tables


def solve(
    instance: ThresholdedInstance,
    representation: IntervalRepresentation,
    metrics: Optional[SolveMetrics] = None,
) -> SolveResult:
    """
    dyn(G, tau) and a minimum dynamic monopoly of an interval instance with
    tau <= t. Components are solved independently and summed.
    """
    if not instance.bounded:
        bad = ", ".join(instance.violations())
        raise ConstraintError(f"threshold exceeds t={instance.t} at: {bad}")
    check_matches(representation, instance.graph)

    graph = instance.graph
    components = split_components(instance, representation)
    if metrics is not None:
        metrics.n, metrics.m, metrics.t = graph.n, graph.m, instance.t
        metrics.components = len(components)

    if instance.t == 0:
        # every threshold is <= 0: the empty set already floods the graph
        result = SolveResult(dyn=0, monopoly=frozenset(), components=len(components))
    else:
        total = 0
        monopoly = set()
        all_tables = []
        for sub, sub_rep in components:
            dyn, witness, tables = solve_component(sub, sub_rep, metrics)
            logger.info("component of %d vertices: dyn=%d", sub.graph.n, dyn)
            total += dyn
            monopoly |= witness
            all_tables.append(tables)
        result = SolveResult(dyn=total, monopoly=frozenset(monopoly), components=len(components), tables=all_tables)

    if metrics is not None:
        metrics.dyn = result.dyn
    return result
