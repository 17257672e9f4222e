"""Longest-path (stretch) and shortest-distance (diameter) analysis.

Both operations return instrumentation counters witnessing the work
actually performed: stretch evaluates every vertex once and consults
every edge once, and the all-pairs sweep performs at most |E|*|V|
distance updates. Counters are fresh per call.
"""

from __future__ import annotations

from dataclasses import dataclass

from dagmetrics.core import Dag, EmptyGraph, VertexId, topological_order

# source index -> {reachable index -> shortest directed distance in edges};
# entries exist only for nonempty paths, so sinks have no row and d(u,u)
# is never stored.
DistanceMap = dict[int, dict[int, int]]


@dataclass
class InstrumentationCounters:
    vertex_evaluations: int = 0
    edge_examinations: int = 0
    distance_updates: int = 0


@dataclass
class StretchResult:
    """Per-vertex longest-path-from lengths and the global maximum."""

    lp: list[int]  # lp[v] = longest directed path starting at v, in edges
    stretch: int
    witness_source: VertexId  # smallest-index vertex with lp == stretch


@dataclass
class DiameterResult:
    diameter: int
    witness: tuple[VertexId, VertexId] | None  # lexicographically smallest


def stretch(g: Dag) -> tuple[StretchResult, InstrumentationCounters]:
    """Longest directed path length, memoized over one reverse-topological sweep.

    Each vertex is evaluated exactly once (sinks get lp = 0, every other
    vertex 1 + max over successors), so the counters come out to exactly
    |V| vertex evaluations and |E| edge examinations. Iterative on
    purpose: recursion would overflow on long chains.
    """
    if g.n == 0:
        raise EmptyGraph()
    out_adj = g.out_adj
    lp = [0] * g.n
    ve = 0
    ee = 0
    for v in reversed(topological_order(g)):
        ve += 1
        row = out_adj[v]
        ee += len(row)
        best = -1
        for c in row:
            if lp[c] > best:
                best = lp[c]
        lp[v] = best + 1
    top = -1
    witness = 0
    for v, value in enumerate(lp):
        if value > top:
            top = value
            witness = v
    result = StretchResult(lp=lp, stretch=top, witness_source=witness)
    return result, InstrumentationCounters(vertex_evaluations=ve, edge_examinations=ee)


def all_pairs_distances(g: Dag) -> tuple[DistanceMap, InstrumentationCounters]:
    """Shortest directed distances for every reachable ordered pair.

    Vertices are processed in reverse topological order, which is
    consistent with repeatedly peeling the current sink set: when a
    vertex is reached, every successor's row is final. A vertex's row
    starts from distance 1 to each successor and min-merges each
    successor's row shifted by +1. distance_updates counts every entry
    touched by those merges and is bounded by |E|*|V|.
    """
    rows: DistanceMap = {}
    ve = 0
    ee = 0
    du = 0
    big = g.n + 1  # larger than any possible distance
    for p in reversed(topological_order(g)):
        ve += 1
        succs = g.out_adj[p]
        if not succs:
            continue
        row: dict[int, int] = {}
        get = row.get
        for c in succs:
            ee += 1
            du += 1
            if get(c, big) > 1:
                row[c] = 1
            crow = rows.get(c)
            if crow:
                for x, dx in crow.items():
                    du += 1
                    nd = dx + 1
                    if nd < get(x, big):
                        row[x] = nd
        rows[p] = row
    counters = InstrumentationCounters(
        vertex_evaluations=ve, edge_examinations=ee, distance_updates=du
    )
    return rows, counters


def diameter(g: Dag) -> tuple[DiameterResult, InstrumentationCounters]:
    """Maximum shortest directed distance over all reachable pairs.

    0 with no witness when nothing is reachable; otherwise the witness is
    the lexicographically smallest (u, v) attaining the maximum.
    """
    rows, counters = all_pairs_distances(g)
    best = 0
    witness: tuple[VertexId, VertexId] | None = None
    for u in sorted(rows):
        row = rows[u]
        for v in sorted(row):
            if row[v] > best:
                best = row[v]
                witness = (u, v)
    return DiameterResult(diameter=best, witness=witness), counters
