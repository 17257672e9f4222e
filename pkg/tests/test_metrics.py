import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dagmetrics import (
    DagBuildInput,
    EmptyGraph,
    all_pairs_distances,
    bfs_distances,
    build_dag,
    diameter,
    gen_random_dag,
    oracle_diameter,
    oracle_stretch,
    sources,
    stretch,
)
from graphs import chain, dag_from_edges, diamond, skewed


def random_dag(n, p, seed):
    return build_dag(gen_random_dag(n, p, seed))


class TestStretch:
    def test_diamond(self):
        res, counters = stretch(diamond())
        assert res.stretch == 2
        assert res.lp == [2, 1, 1, 0]
        assert res.witness_source == 0
        assert counters.vertex_evaluations == 4
        assert counters.edge_examinations == 4

    def test_skewed(self):
        res, _ = stretch(skewed())
        assert res.stretch == 2
        assert res.lp == [2, 1, 0]

    def test_chain(self):
        res, _ = stretch(chain(6))
        assert res.stretch == 5
        assert res.lp == [5, 4, 3, 2, 1, 0]

    def test_single_vertex(self):
        g = build_dag(DagBuildInput(edges=[], isolated=["v"]))
        res, counters = stretch(g)
        assert res.stretch == 0
        assert res.witness_source == 0
        assert counters.vertex_evaluations == 1
        assert counters.edge_examinations == 0

    def test_empty_graph_raises(self):
        g = build_dag(DagBuildInput(edges=[], isolated=[]))
        with pytest.raises(EmptyGraph):
            stretch(g)

    def test_witness_is_smallest_index(self):
        # both b and a start a longest path of length 1; a has index 1
        g = dag_from_edges([("b", "x"), ("a", "y")])
        res, _ = stretch(g)
        assert res.lp[res.witness_source] == res.stretch
        assert res.witness_source == 0  # 'b' appeared first

    def test_max_over_sources_is_global_max(self):
        # longest paths can only extend backwards to a source, so the
        # maximum over sources already equals the maximum over all vertices
        for seed in range(30):
            g = random_dag(8, 0.3, seed)
            res, _ = stretch(g)
            assert max(res.lp[s] for s in sources(g)) == res.stretch

    def test_matches_oracle(self):
        for seed in range(40):
            g = random_dag(7, 0.35, seed)
            res, _ = stretch(g)
            assert res.stretch == oracle_stretch(g)

    def test_counters_exact(self):
        for seed in range(20):
            g = random_dag(9, 0.25, seed + 100)
            _, counters = stretch(g)
            assert counters.vertex_evaluations == g.n
            assert counters.edge_examinations == g.m
            assert counters.distance_updates == 0


class TestAllPairsDistances:
    def test_diamond(self):
        rows, counters = all_pairs_distances(diamond())
        assert {u: dict(r) for u, r in rows.items()} == {
            0: {1: 1, 2: 1, 3: 2},
            1: {3: 1},
            2: {3: 1},
        }
        assert counters.distance_updates == 6
        assert counters.vertex_evaluations == 4
        assert counters.edge_examinations == 4

    def test_skewed_shortcut_wins(self):
        rows, _ = all_pairs_distances(skewed())
        assert rows[0][2] == 1  # direct 0->3 beats 0->1->3

    def test_sinks_have_no_row(self):
        rows, _ = all_pairs_distances(diamond())
        assert 3 not in rows

    def test_unreachable_pairs_absent(self):
        g = dag_from_edges([("a", "b"), ("c", "d")])
        rows, _ = all_pairs_distances(g)
        assert 2 not in rows[0] and 3 not in rows[0]

    def test_agrees_with_bfs(self):
        for seed in range(30):
            g = random_dag(8, 0.3, seed + 500)
            rows, _ = all_pairs_distances(g)
            for u in range(g.n):
                assert rows.get(u, {}) == bfs_distances(g, u)

    def test_update_budget(self):
        for seed in range(20):
            g = random_dag(10, 0.4, seed + 900)
            _, counters = all_pairs_distances(g)
            assert counters.distance_updates <= g.m * g.n


class TestDiameter:
    def test_diamond(self):
        res, _ = diameter(diamond())
        assert res.diameter == 2
        assert res.witness == (0, 3)

    def test_skewed_below_stretch(self):
        dres, _ = diameter(skewed())
        sres, _ = stretch(skewed())
        assert dres.diameter == 1 < sres.stretch == 2

    def test_no_edges(self):
        g = build_dag(DagBuildInput(edges=[], isolated=["a", "b"]))
        res, _ = diameter(g)
        assert res.diameter == 0
        assert res.witness is None

    def test_witness_lexicographically_smallest(self):
        # two pairs realize diameter 1; (0,1) sorts before (2,3)
        g = dag_from_edges([("a", "b"), ("c", "d")])
        res, _ = diameter(g)
        assert res.witness == (0, 1)

    def test_witness_distance_is_diameter(self):
        for seed in range(25):
            g = random_dag(9, 0.3, seed + 300)
            res, _ = diameter(g)
            if res.witness is None:
                assert res.diameter == 0
                continue
            u, v = res.witness
            assert bfs_distances(g, u)[v] == res.diameter

    def test_matches_oracle(self):
        for seed in range(40):
            g = random_dag(7, 0.35, seed + 700)
            res, _ = diameter(g)
            assert res.diameter == oracle_diameter(g)


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(min_value=1, max_value=9),
    p=st.floats(min_value=0.0, max_value=0.9),
    seed=st.integers(min_value=0, max_value=10**6),
)
def test_diameter_never_exceeds_stretch(n, p, seed):
    g = random_dag(n, p, seed)
    dres, _ = diameter(g)
    sres, _ = stretch(g)
    assert dres.diameter <= sres.stretch


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(min_value=1, max_value=8),
    p=st.floats(min_value=0.0, max_value=0.9),
    seed=st.integers(min_value=0, max_value=10**6),
)
def test_stretch_agrees_with_exhaustive_enumeration(n, p, seed):
    g = random_dag(n, p, seed)
    res, _ = stretch(g)
    assert res.stretch == oracle_stretch(g)
