"""Shared graph builders for the test suite."""

from dagmetrics import Dag, DagBuildInput, build_dag

# Two routes 0->1->3 and 0->2->3 of equal length: balanced, stretch 2.
DIAMOND = [("0", "1"), ("0", "2"), ("1", "3"), ("2", "3")]

# A shortcut edge 0->3 next to the two-hop route 0->1->3: unbalanced,
# and the graph where diameter (1) is strictly below stretch (2).
SKEWED = [("0", "1"), ("1", "3"), ("0", "3")]

# Every pair of vertices is joined by at most one path, so all path
# lengths trivially agree, yet no edge-advances-one-layer labeling
# exists: a->x forces x one past a, while a->y / b->z->y force y one
# past a and two past b, and b->x then over-constrains the system.
GAP = [("a", "x"), ("b", "x"), ("a", "y"), ("b", "z"), ("z", "y")]


def dag_from_edges(edges, isolated=()) -> Dag:
    return build_dag(DagBuildInput(edges=list(edges), isolated=list(isolated)))


def chain(n: int) -> Dag:
    return dag_from_edges((str(i), str(i + 1)) for i in range(n - 1))


def diamond() -> Dag:
    return dag_from_edges(DIAMOND)


def skewed() -> Dag:
    return dag_from_edges(SKEWED)


def gap() -> Dag:
    return dag_from_edges(GAP)
