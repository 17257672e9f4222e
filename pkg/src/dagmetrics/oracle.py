"""Brute-force reference implementations and seeded graph generators.

Everything here exists to double-check the fast algorithms, so none of
it shares code with `metrics` or `layering`: longest paths come from
exhaustive enumeration, diameter from per-source BFS, and gradedness
from an offset-carrying union-find. Enumerations are capped at a small
vertex count because path counts grow exponentially.
"""

from __future__ import annotations

import random
from collections import Counter, deque

from dagmetrics.core import Dag, DagBuildInput, DagError, VertexId

SMALL_GRAPH_BOUND = 12


class TooLarge(DagError):
    def __init__(self, n: int, bound: int):
        super().__init__(f"graph has {n} vertices, oracle bound is {bound}")
        self.n = n
        self.bound = bound


def enumerate_path_lengths(
    g: Dag, u: VertexId, v: VertexId, bound: int = SMALL_GRAPH_BOUND
) -> Counter:
    """Multiset of lengths of all directed paths u -> v, by exhaustive DFS."""
    if g.n > bound:
        raise TooLarge(g.n, bound)
    lengths: Counter = Counter()
    out_adj = g.out_adj

    def walk(x: VertexId, depth: int) -> None:
        for c in out_adj[x]:
            if c == v:
                lengths[depth + 1] += 1
            else:
                # acyclic, so a path past v can never come back to v
                walk(c, depth + 1)

    walk(u, 0)
    return lengths


def oracle_stretch(g: Dag, bound: int = SMALL_GRAPH_BOUND) -> int:
    """Longest path over all ordered pairs; 0 when nothing is reachable."""
    if g.n > bound:
        raise TooLarge(g.n, bound)
    best = 0
    for u in range(g.n):
        for v in range(g.n):
            if u == v:
                continue
            lengths = enumerate_path_lengths(g, u, v, bound)
            if lengths:
                best = max(best, max(lengths))
    return best


def bfs_distances(g: Dag, source: VertexId) -> dict[VertexId, int]:
    """Shortest directed distance from source to each reachable vertex.

    The source itself is excluded: only nonempty paths count.
    """
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g.out_adj[u]:
            if v not in dist:
                dist[v] = du + 1
                queue.append(v)
    del dist[source]
    return dist


def oracle_diameter(g: Dag) -> int:
    """Maximum finite BFS distance over all start vertices."""
    best = 0
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if dist:
            best = max(best, max(dist.values()))
    return best


def oracle_graded(g: Dag) -> bool:
    """Whether labels with label(v) = label(u) + 1 on every edge exist.

    Decided by union-find carrying label offsets: each edge merges its
    endpoints with relative offset 1, and a merge that closes a group
    with an inconsistent offset proves infeasibility.
    """
    parent = list(range(g.n))
    rank = [0] * g.n
    offset = [0] * g.n  # label(x) - label(parent[x]); 0 for roots

    def find(x: VertexId) -> VertexId:
        path = []
        while parent[x] != x:
            path.append(x)
            x = parent[x]
        acc = 0
        for node in reversed(path):
            acc += offset[node]
            parent[node] = x
            offset[node] = acc
        return x

    for u in range(g.n):
        for v in g.out_adj[u]:
            ru = find(u)
            rv = find(v)
            du, dv = offset[u], offset[v]
            if ru == rv:
                if dv - du != 1:
                    return False
            elif rank[ru] < rank[rv]:
                parent[ru] = rv
                offset[ru] = dv - du - 1
            else:
                parent[rv] = ru
                offset[rv] = du + 1 - dv
                if rank[ru] == rank[rv]:
                    rank[ru] += 1
    return True


def oracle_all_paths_equal(g: Dag, bound: int = SMALL_GRAPH_BOUND) -> bool:
    """True iff every ordered pair's paths all have one common length."""
    if g.n > bound:
        raise TooLarge(g.n, bound)
    for u in range(g.n):
        for v in range(g.n):
            if u == v:
                continue
            if len(enumerate_path_lengths(g, u, v, bound)) > 1:
                return False
    return True


def gen_random_dag(n: int, p: float, seed: int) -> DagBuildInput:
    """Random DAG: seeded permutation as topological order, each forward
    pair kept with probability p. Reproducible for a given (n, p, seed).
    """
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    names = [str(v) for v in range(n)]
    edges: list[tuple[str, str]] = []
    touched = [False] * n
    for i in range(n):
        u = perm[i]
        for j in range(i + 1, n):
            if rng.random() < p:
                v = perm[j]
                edges.append((names[u], names[v]))
                touched[u] = True
                touched[v] = True
    isolated = [names[v] for v in range(n) if not touched[v]]
    return DagBuildInput(edges=edges, isolated=isolated)


def gen_layered_dag(layers: int, width: int, p: float, seed: int) -> DagBuildInput:
    """Layered DAG on a layers x width grid, edges only between adjacent
    layers, so the grading is exactly the layer index.

    Each adjacent-layer pair is sampled with probability p; afterwards
    every vertex is forced to keep at least one edge toward each
    neighboring layer, so no vertex ends up skipping a layer.
    """
    rng = random.Random(seed)
    n = layers * width
    names = [str(v) for v in range(n)]
    edges: list[tuple[str, str]] = []
    has_in = [False] * n
    has_out = [False] * n

    def connect(u: int, v: int) -> None:
        edges.append((names[u], names[v]))
        has_out[u] = True
        has_in[v] = True

    for k in range(layers - 1):
        base = k * width
        for a in range(base, base + width):
            for b in range(base + width, base + 2 * width):
                if rng.random() < p:
                    connect(a, b)
    for v in range(width, n):
        if not has_in[v]:
            base = (v // width - 1) * width
            connect(base + rng.randrange(width), v)
    for v in range(n - width):
        if not has_out[v]:
            base = (v // width + 1) * width
            connect(v, base + rng.randrange(width))
    isolated = [names[v] for v in range(n) if not has_in[v] and not has_out[v]]
    return DagBuildInput(edges=edges, isolated=isolated)
