import random

import pytest

from onep import families
from onep.certify import (
    ThetaTable,
    ThetaViolation,
    bipartite_one_planar_bound,
    chromatic_number,
    clique_number,
    color_double_stellated,
    density_check,
    is_proper_coloring,
    theta_profile,
)
from onep.certify.structure import BLUE, THIRD
from onep.graph import GraphError, induced_subgraph, make_graph


class TestTheta:
    @pytest.mark.parametrize("k", [10, 12, 14])
    def test_table(self, k):
        res = theta_profile(families.build_hk(k))
        assert isinstance(res, ThetaTable) and res.as_tuple() == (3, 1, 2, 2, 1, 3)

    def test_mutation(self):
        h = families.build_hk(10)
        x, y = h.b(1), h.u(3)
        assert h.graph.has_edge(x, y)
        broken = make_graph(h.graph.n, [e for e in h.graph.edges() if e != (min(x, y), max(x, y))])
        res = theta_profile(families.HkGraph(10, broken, h.drawing))
        assert isinstance(res, ThetaViolation)
        assert res.vertex in (x, y) and res.found == res.expected - 1


class TestDensity:
    def test_bipartite_bound_values(self):
        assert (bipartite_one_planar_bound(6), bipartite_one_planar_bound(8), bipartite_one_planar_bound(9)) == (9, 16, 18)

    def test_bipartite_bound_small(self):
        with pytest.raises(ValueError):
            bipartite_one_planar_bound(3)

    def test_k2222_optimal(self):
        assert density_check(families.build_k2222()[0], "optimal")

    def test_g10_bipartite(self):
        v = density_check(families.build_gk(10).graph, "bipartite_one_planar")
        assert v and v.bound == 234

    def test_families_against_their_classes(self):
        for k in (10, 12, 14):
            assert density_check(families.build_hk(k).graph, "bipartite_one_planar")
            assert density_check(families.build_gk(k).graph, "bipartite_one_planar")
        for r in range(3, 7):
            rec = families.double_stellate(families.build_pseudo_double_wheel(r))
            assert density_check(rec.graph, "one_planar")
        for n in range(3, 9):
            assert density_check(families.build_k2n(n), "bipartite_one_planar")

    def test_unknown_class(self):
        with pytest.raises(ValueError):
            density_check(families.build_k2n(3), "dense")


def qs_record(r):
    return families.double_stellate(families.build_pseudo_double_wheel(r))


def has_triangle(g):
    return clique_number(g)[0] >= 3


class TestColourDoubleStellated:
    def test_full_graph(self):
        rec = qs_record(3)
        colour = color_double_stellated(rec, range(rec.graph.n))
        assert is_proper_coloring(rec.graph, colour) and len(set(colour.values())) == 3
        assert clique_number(rec.graph)[0] == chromatic_number(rec.graph)[0] == 3

    def test_stellating_only(self):
        rec = qs_record(3)
        colour = color_double_stellated(rec, rec.stellating_vertices)
        assert set(colour.values()) == {BLUE}

    def test_face_plus_one(self):
        rec = qs_record(3)
        s = rec.stellating_vertices[0]
        chosen = list(rec.graph.adj[s]) + [s]
        colour = color_double_stellated(rec, chosen)
        assert colour[s] == THIRD and len(set(colour.values())) == 3
        h, _ = induced_subgraph(rec.graph, chosen)
        assert clique_number(h)[0] == chromatic_number(h)[0] == 3

    def test_out_of_range(self):
        with pytest.raises(GraphError):
            color_double_stellated(qs_record(3), [500])

    @pytest.mark.parametrize("r", [3, 5])
    def test_random_induced_subgraphs(self, r):
        rec = qs_record(r)
        rng = random.Random(r)
        for _ in range(300):
            chosen = [v for v in range(rec.graph.n) if rng.random() < rng.random()]
            colour = color_double_stellated(rec, chosen)
            h, idx = induced_subgraph(rec.graph, chosen)
            local = [colour[v] for v in idx]
            assert is_proper_coloring(h, local)
            assert (len(set(local)) == 3) == has_triangle(h)
