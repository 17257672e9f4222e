"""Layer assignment for graded DAGs, with a conflict witness otherwise.

A DAG is layerable here iff a labeling with label(v) = label(u) + 1 on
every edge exists. Labels within a weak component are forced once the
seed is fixed, so the two algorithms below (priority-queue propagation
and depth-first traversal) return bit-identical assignments on layerable
inputs; each component is normalized so its minimum layer is 0. On
conflict both report the vertex whose forced label disagrees with the
label it already carries.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Union

from dagmetrics.core import Dag, Edge, EmptyGraph, VertexId, weakly_connected_components
from dagmetrics.metrics import InstrumentationCounters, stretch


@dataclass
class LayerAssignment:
    layer: list[int]  # layer[v] = layer[u] + 1 on every edge (u, v)
    component_of: list[int]


@dataclass
class UnbalancedWitness:
    vertex: VertexId
    existing_label: int
    attempted_label: int
    via_edge: Edge


LayeringOutcome = Union[LayerAssignment, UnbalancedWitness]


def select_seed(g: Dag, component: list[VertexId], lp: list[int]) -> VertexId:
    """Source vertex of the component with maximal lp, smallest index on ties."""
    best = -1
    for v in sorted(component):
        if g.in_adj[v]:
            continue
        if best < 0 or lp[v] > lp[best]:
            best = v
    return best


def layer_pq(g: Dag) -> tuple[LayeringOutcome, InstrumentationCounters]:
    """Label each component outward from its seed via a min-priority queue.

    Pops the minimum (label, index) entry; unlabeled parents get label-1,
    unlabeled children label+1, and each gets pushed exactly once.
    Already-labeled neighbors are verified against the edge constraint.
    vertex_evaluations counts pops (pushes equal pops by construction).
    """
    if g.n == 0:
        raise EmptyGraph()
    lp = stretch(g)[0].lp
    comps = weakly_connected_components(g)
    label: list[int | None] = [None] * g.n
    ve = 0
    ee = 0
    for comp in comps:
        seed = select_seed(g, comp, lp)
        label[seed] = 0
        heap: list[tuple[int, VertexId]] = [(0, seed)]
        while heap:
            lab, o = heapq.heappop(heap)
            ve += 1
            for p in g.in_adj[o]:
                ee += 1
                want = lab - 1
                got = label[p]
                if got is None:
                    label[p] = want
                    heapq.heappush(heap, (want, p))
                elif got != want:
                    counters = InstrumentationCounters(
                        vertex_evaluations=ve, edge_examinations=ee
                    )
                    return UnbalancedWitness(p, got, want, Edge(p, o)), counters
            for c in g.out_adj[o]:
                ee += 1
                want = lab + 1
                got = label[c]
                if got is None:
                    label[c] = want
                    heapq.heappush(heap, (want, c))
                elif got != want:
                    counters = InstrumentationCounters(
                        vertex_evaluations=ve, edge_examinations=ee
                    )
                    return UnbalancedWitness(c, got, want, Edge(o, c)), counters
    counters = InstrumentationCounters(vertex_evaluations=ve, edge_examinations=ee)
    return _normalize(comps, label, g.n), counters


def layer_traversal(g: Dag) -> tuple[LayeringOutcome, InstrumentationCounters]:
    """Label each component by depth-first propagation from its seed.

    Same outcome contract as layer_pq. Uses an explicit stack so a chain
    of millions of vertices cannot overflow the call stack; every vertex
    is evaluated once and every edge examined at most twice.
    """
    if g.n == 0:
        raise EmptyGraph()
    lp = stretch(g)[0].lp
    comps = weakly_connected_components(g)
    label: list[int | None] = [None] * g.n
    in_adj, out_adj = g.in_adj, g.out_adj
    ve = 0
    ee = 0
    for comp in comps:
        seed = select_seed(g, comp, lp)
        label[seed] = 0
        stack = [seed]
        while stack:
            v = stack.pop()
            ve += 1
            lv = label[v]
            want = lv - 1
            for p in in_adj[v]:
                ee += 1
                got = label[p]
                if got is None:
                    label[p] = want
                    stack.append(p)
                elif got != want:
                    counters = InstrumentationCounters(
                        vertex_evaluations=ve, edge_examinations=ee
                    )
                    return UnbalancedWitness(p, got, want, Edge(p, v)), counters
            want = lv + 1
            for c in out_adj[v]:
                ee += 1
                got = label[c]
                if got is None:
                    label[c] = want
                    stack.append(c)
                elif got != want:
                    counters = InstrumentationCounters(
                        vertex_evaluations=ve, edge_examinations=ee
                    )
                    return UnbalancedWitness(c, got, want, Edge(v, c)), counters
    counters = InstrumentationCounters(vertex_evaluations=ve, edge_examinations=ee)
    return _normalize(comps, label, g.n), counters


def _normalize(
    comps: list[list[VertexId]], label: list[int | None], n: int
) -> LayerAssignment:
    """Shift every component so its minimum layer is exactly 0."""
    layer = [0] * n
    component_of = [0] * n
    for cid, comp in enumerate(comps):
        low = min(label[v] for v in comp)
        for v in comp:
            layer[v] = label[v] - low
            component_of[v] = cid
    return LayerAssignment(layer=layer, component_of=component_of)


def check_balanced(g: Dag) -> tuple[bool, UnbalancedWitness | None]:
    """True iff a consistent layering exists, else False with the witness."""
    outcome, _ = layer_traversal(g)
    if isinstance(outcome, LayerAssignment):
        return True, None
    return False, outcome
