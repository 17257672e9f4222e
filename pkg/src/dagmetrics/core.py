"""Immutable DAG construction and structural queries.

Graphs arrive as labeled edge lists; vertices get dense integer indices
in first-appearance order so every downstream report is reproducible.
Adjacency lists are kept sorted by target index, which pins traversal
order (and therefore every witness) across runs and platforms.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple

# Vertices are dense integer indices in [0, n); external labels live in
# Dag.labels / Dag.index_of.
VertexId = int


class DagError(Exception):
    """Base class for graph input and validation errors."""


class MalformedLine(DagError):
    """Edge-list line that is not an edge, a vertex, a comment, or blank."""

    def __init__(self, line_number: int, reason: str):
        super().__init__(f"line {line_number}: {reason}")
        self.line_number = line_number
        self.reason = reason


class SelfLoop(DagError):
    def __init__(self, label: str):
        super().__init__(f"self-loop at '{label}'")
        self.label = label


class DuplicateEdge(DagError):
    def __init__(self, src: str, dst: str):
        super().__init__(f"duplicate edge: {src} -> {dst}")
        self.src = src
        self.dst = dst


class CycleDetected(DagError):
    """Input contains a directed cycle; ``cycle`` lists the labels on one."""

    def __init__(self, cycle: list[str]):
        super().__init__("cycle detected: " + " -> ".join([*cycle, cycle[0]]))
        self.cycle = cycle


class EmptyGraph(DagError):
    def __init__(self):
        super().__init__("graph has no vertices")


class Edge(NamedTuple):
    u: VertexId
    v: VertexId


@dataclass
class DagBuildInput:
    """Labeled edges plus vertices declared without incident edges.

    Labels must be non-empty strings containing no whitespace.
    """

    edges: list[tuple[str, str]] = field(default_factory=list)
    isolated: list[str] = field(default_factory=list)


@dataclass
class Dag:
    """Validated acyclic digraph. Treat all fields as read-only."""

    n: int
    m: int
    out_adj: list[list[VertexId]]  # per vertex, sorted by target index
    in_adj: list[list[VertexId]]  # per vertex, sorted by source index
    labels: list[str]  # index -> external label
    index_of: dict[str, VertexId]  # external label -> index
    topo: list[VertexId]  # lexicographically smallest topological order


def parse_edge_list(text: str) -> DagBuildInput:
    """Parse edge-list text: one "FROM TO" edge or one lone vertex per line.

    Blank lines are skipped; lines whose first non-blank character is '#'
    are comments. Labels are kept verbatim and may not begin with '#'.
    """
    edges: list[tuple[str, str]] = []
    isolated: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) > 2:
            raise MalformedLine(
                lineno, f"expected 'FROM TO' or a single vertex, got {len(tokens)} tokens"
            )
        for tok in tokens:
            if tok.startswith("#"):
                raise MalformedLine(lineno, f"label may not begin with '#': {tok!r}")
        if len(tokens) == 2:
            edges.append((tokens[0], tokens[1]))
        else:
            isolated.append(tokens[0])
    return DagBuildInput(edges=edges, isolated=isolated)


def build_dag(inp: DagBuildInput) -> Dag:
    """Build and validate a Dag, assigning indices in first-appearance order.

    Raises SelfLoop, DuplicateEdge, or CycleDetected on invalid input; a
    Dag is returned only when a full topological order exists.
    """
    index_of: dict[str, VertexId] = {}
    labels: list[str] = []
    out_adj: list[list[VertexId]] = []
    in_adj: list[list[VertexId]] = []

    for a, b in inp.edges:
        u = index_of.get(a)
        if u is None:
            u = len(labels)
            index_of[a] = u
            labels.append(a)
            out_adj.append([])
            in_adj.append([])
        v = index_of.get(b)
        if v is None:
            v = len(labels)
            index_of[b] = v
            labels.append(b)
            out_adj.append([])
            in_adj.append([])
        if u == v:
            raise SelfLoop(a)
        out_adj[u].append(v)
        in_adj[v].append(u)
    for a in inp.isolated:
        if a not in index_of:
            index_of[a] = len(labels)
            labels.append(a)
            out_adj.append([])
            in_adj.append([])

    m = 0
    for u, row in enumerate(out_adj):
        row.sort()
        m += len(row)
        for x, y in zip(row, row[1:]):
            if x == y:
                raise DuplicateEdge(labels[u], labels[x])
    for row in in_adj:
        row.sort()

    topo = _toposort(out_adj, in_adj, labels)
    return Dag(
        n=len(labels),
        m=m,
        out_adj=out_adj,
        in_adj=in_adj,
        labels=labels,
        index_of=index_of,
        topo=topo,
    )


def _toposort(
    out_adj: list[list[VertexId]], in_adj: list[list[VertexId]], labels: list[str]
) -> list[VertexId]:
    """Kahn's algorithm with a min-heap: smallest eligible index first."""
    n = len(labels)
    indeg = [len(preds) for preds in in_adj]
    heap = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(heap)
    order: list[VertexId] = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for v in out_adj[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, v)
    if len(order) < n:
        raise CycleDetected(_extract_cycle(in_adj, indeg, labels))
    return order


def _extract_cycle(
    in_adj: list[list[VertexId]], indeg: list[int], labels: list[str]
) -> list[str]:
    # Vertices left with positive residual in-degree all have a predecessor
    # among themselves, so walking predecessors must revisit a vertex.
    remaining = {v for v, d in enumerate(indeg) if d > 0}
    start = min(remaining)
    seen_at: dict[VertexId, int] = {}
    path: list[VertexId] = []
    u = start
    while u not in seen_at:
        seen_at[u] = len(path)
        path.append(u)
        u = min(p for p in in_adj[u] if p in remaining)
    cycle = path[seen_at[u]:]
    cycle.reverse()  # predecessor walk -> forward edge order
    lo = cycle.index(min(cycle))
    cycle = cycle[lo:] + cycle[:lo]
    return [labels[v] for v in cycle]


def topological_order(g: Dag) -> list[VertexId]:
    """Deterministic topological order, ties broken by smallest index."""
    return g.topo


def sources(g: Dag) -> set[VertexId]:
    """Vertices with no incoming edges."""
    return {v for v in range(g.n) if not g.in_adj[v]}


def sinks(g: Dag) -> set[VertexId]:
    """Vertices with no outgoing edges."""
    return {v for v in range(g.n) if not g.out_adj[v]}


def weakly_connected_components(g: Dag) -> list[list[VertexId]]:
    """Components of the underlying undirected graph.

    Ordered by smallest member index; each component list is sorted.
    """
    comp = [-1] * g.n
    comps: list[list[VertexId]] = []
    out_adj, in_adj = g.out_adj, g.in_adj
    for s in range(g.n):
        if comp[s] != -1:
            continue
        cid = len(comps)
        comp[s] = cid
        members = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in out_adj[u]:
                if comp[v] == -1:
                    comp[v] = cid
                    members.append(v)
                    queue.append(v)
            for v in in_adj[u]:
                if comp[v] == -1:
                    comp[v] = cid
                    members.append(v)
                    queue.append(v)
        members.sort()
        comps.append(members)
    return comps
