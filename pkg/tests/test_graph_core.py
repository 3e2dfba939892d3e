import random

import oracles
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from onep import families
from onep.graph import (
    Bipartition,
    GraphError,
    OddCycle,
    complement,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    connected_components,
    cube_graph,
    cycle_graph,
    delete_vertices,
    induced_subgraph,
    is_bipartite,
    make_graph,
    relabel,
    two_coloring,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return make_graph(n, chosen)


class TestMakeGraph:
    def test_k4(self):
        g = make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])
        assert g.m == 6
        assert g.edges() == complete_graph(4).edges()

    def test_empty(self):
        g = make_graph(3, [])
        assert (g.n, g.m) == (3, 0)

    def test_duplicates_collapse(self):
        assert make_graph(5, [(0, 1), (0, 1), (1, 2)]).m == 2
        assert make_graph(5, [(0, 1), (1, 0)]).m == 1

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(-1, 2)]])
    def test_rejects(self, edges):
        with pytest.raises(GraphError):
            make_graph(5, edges)

    def test_negative_order(self):
        with pytest.raises(GraphError):
            make_graph(-1, [])


class TestInducedSubgraph:
    def test_k4_triangle(self):
        h, _ = induced_subgraph(complete_graph(4), [0, 2, 3])
        assert h.edges() == complete_graph(3).edges()

    def test_c5_identity(self):
        c5 = cycle_graph(5)
        h, idx = induced_subgraph(c5, range(5))
        assert h == c5 and idx == list(range(5))

    def test_stellating_vertices_independent(self):
        rec = families.double_stellate(families.build_pseudo_double_wheel(3))
        h, _ = induced_subgraph(rec.graph, rec.stellating_vertices)
        assert (h.n, h.m) == (12, 0)

    def test_out_of_range(self):
        with pytest.raises(GraphError):
            induced_subgraph(complete_graph(3), [0, 7])


class TestComplement:
    def test_k4(self):
        assert complement(complete_graph(4)).m == 0

    def test_c5_self_complementary(self):
        from onep.canon import are_isomorphic

        assert are_isomorphic(complement(cycle_graph(5)), cycle_graph(5))

    def test_k2222_complement_is_matching(self):
        comp = complement(complete_multipartite(2, 2, 2, 2))
        assert comp.m == 4 and all(d == 1 for d in comp.degrees())

    @given(graphs())
    def test_involution(self, g):
        assert complement(complement(g)) == g
        assert g.m + complement(g).m == g.n * (g.n - 1) // 2


class TestTwoColoring:
    def test_cube(self):
        res = two_coloring(cube_graph())
        assert isinstance(res, Bipartition) and res.sizes == (4, 4)

    def test_c5(self):
        res = two_coloring(cycle_graph(5))
        assert isinstance(res, OddCycle) and len(res.cycle) == 5

    def test_h10_balanced(self):
        res = two_coloring(families.build_hk(10).graph)
        assert isinstance(res, Bipartition) and res.sizes == (40, 40)

    @given(graphs())
    @settings(max_examples=150)
    def test_against_brute_force(self, g):
        res = two_coloring(g)
        assert isinstance(res, Bipartition) == oracles.brute_bipartite(g.n, g.edges())
        if isinstance(res, Bipartition):
            assert all(res.side[u] != res.side[v] for u, v in g.edges())
        else:
            c = res.cycle
            assert len(c) % 2 == 1 and len(set(c)) == len(c)
            assert all(g.has_edge(c[i - 1], c[i]) for i in range(len(c)))


class TestComponents:
    def test_connected(self):
        assert len(connected_components(cycle_graph(6))) == 1

    def test_empty_graph(self):
        assert len(connected_components(make_graph(5, []))) == 5

    def test_qs_minus_base(self):
        rec = families.double_stellate(families.build_pseudo_double_wheel(3))
        comps = connected_components(rec.graph, rec.base_vertices)
        assert len(comps) == 12 and all(len(c) == 1 for c in comps)

    @given(graphs())
    def test_matches_networkx(self, g):
        import networkx as nx

        expected = nx.number_connected_components(oracles.to_nx(g.n, g.edges()))
        assert len(connected_components(g)) == expected


@given(graphs(), st.randoms(use_true_random=False))
def test_relabel_preserves_structure(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert h.m == g.m
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())


def test_delete_vertices_and_bipartite():
    g, idx = delete_vertices(complete_bipartite(3, 4), [0])
    assert g.n == 6 and idx == [1, 2, 3, 4, 5, 6] and is_bipartite(g)


def test_random_bipartite_check_matches_oracle():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(2, 10)
        edges = oracles.random_graph(rng, n, 0.3)
        assert is_bipartite(make_graph(n, edges)) == oracles.brute_bipartite(n, edges)
