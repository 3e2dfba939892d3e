import io
import os

import networkx as nx
import oracles
import pytest

from onep import families
from onep.canon import are_isomorphic, canonical_form
from onep.certify import vertex_connectivity
from onep.drawing import validate_one_planar
from onep.graph import complete_multipartite, is_connected
from onep.io import FormatError, write_planar_code
from onep.plane import PlaneQuadrangulation
from onep.search.quadrangulations import (
    canonical_codes,
    enumerate_quadrangulations,
    face_expansions,
    face_insertions,
    ingest_planar_code,
    map_code,
)
from onep.search.sweep import (
    Rejected,
    SearchError,
    optimal_from_quadrangulation,
    sweep_optimal_perfect,
)

ORACLE_MAX_N = 12 if os.environ.get("ONEP_SLOW") else 11


def planar_code_bytes(rotations):
    buf = io.BytesIO()
    write_planar_code([list(r) for r in rotations], buf)
    return buf.getvalue()


class TestEnumeration:
    def test_order8_is_cube(self):
        quads = list(enumerate_quadrangulations(8))
        assert len(quads) == 1
        assert canonical_form(quads[0].graph) == canonical_form(families.build_pseudo_double_wheel(3).graph)

    def test_order8_against_exhaustive_filter(self):
        brute = oracles.brute_quadrangulations_order8()
        assert len(brute) == 1
        mine = list(enumerate_quadrangulations(8))[0].graph
        assert nx.is_isomorphic(oracles.to_nx(8, brute[0]), oracles.to_nx(8, mine.edges()))

    @pytest.mark.parametrize("n", range(8, 16))
    def test_outputs_are_valid_and_distinct(self, n):
        quads = list(enumerate_quadrangulations(n))
        forms = set()
        for q in quads:
            q.check()
            assert q.graph.m == 2 * n - 4
            assert vertex_connectivity(q.graph)[0] >= 3
            forms.add(canonical_form(q.graph).encoding)
        # 3-connected planar graphs embed uniquely, so graph classes = map classes
        assert len(forms) == len(quads)

    def test_deterministic(self):
        a = [q.rotation for q in enumerate_quadrangulations(13)]
        enumerate_quadrangulations.__globals__["_level"].cache_clear()
        b = [q.rotation for q in enumerate_quadrangulations(13)]
        assert a == b

    def test_rejects_small_order(self):
        with pytest.raises(ValueError):
            list(enumerate_quadrangulations(6))

    def test_expansions_keep_quadrangulations(self):
        q = families.build_pseudo_double_wheel(4)
        for child in list(face_expansions(q.rotation)) + list(face_insertions(q.rotation)):
            PlaneQuadrangulation.from_rotation(child).check()

    def test_map_code_is_label_invariant(self):
        q = families.build_pseudo_double_wheel(5)
        perm = [3, 7, 0, 11, 1, 9, 4, 2, 10, 5, 8, 6]
        moved = [None] * q.n
        for v, r in enumerate(q.rotation):
            moved[perm[v]] = tuple(perm[w] for w in r)
        assert map_code(tuple(moved)) == map_code(q.rotation)


@pytest.fixture(scope="module")
def reference():
    return oracles.three_connected_quadrangulations(ORACLE_MAX_N)


class TestIngestion:
    def test_reference_generator_counts(self, reference):
        # simple quadrangulations of the sphere, counted up to reflection
        known = [1, 1, 2, 3, 9, 18, 62, 198, 803]
        allq = oracles.all_simple_quadrangulations(ORACLE_MAX_N)
        assert [len(allq[n]) for n in range(4, ORACLE_MAX_N + 1)] == known[: ORACLE_MAX_N - 3]

    def test_builtin_matches_ingested_reference(self, reference):
        for n in range(8, ORACLE_MAX_N + 1):
            ingested = ingest_planar_code(planar_code_bytes(reference[n]), n)
            builtin = list(enumerate_quadrangulations(n))
            assert len(ingested) == len(reference[n]) == len(builtin)
            assert canonical_codes(ingested) == canonical_codes(builtin)

    def test_ingestion_dedupes(self):
        q = families.build_pseudo_double_wheel(4)
        data = planar_code_bytes([q.rotation, q.rotation])
        assert len(ingest_planar_code(data)) == 1

    def test_ingestion_filters_order(self):
        data = planar_code_bytes([families.build_pseudo_double_wheel(r).rotation for r in (3, 4)])
        assert [q.n for q in ingest_planar_code(data, 10)] == [10]

    def test_ingestion_rejects_non_quadrangulation(self):
        triangle = ((1, 2), (2, 0), (0, 1))
        with pytest.raises(FormatError):
            ingest_planar_code(planar_code_bytes([triangle]))


class TestOptimal:
    def test_cube_gives_k2222(self):
        res = optimal_from_quadrangulation(families.build_pseudo_double_wheel(3))
        assert are_isomorphic(res.graph, complete_multipartite(2, 2, 2, 2))
        assert res.graph.m == 24
        # K_{2,2,2,2} loses connectivity only when 6 vertices are removed
        assert res.connectivity == 6

    def test_k23_is_rejected(self):
        k23 = PlaneQuadrangulation.from_faces(5, [(0, 2, 1, 3), (0, 3, 1, 4), (0, 4, 1, 2)])
        k23.check()
        res = optimal_from_quadrangulation(k23)
        assert isinstance(res, Rejected) and "duplicates" in res.reason

    @pytest.mark.parametrize("n", range(8, 15))
    def test_invariants_on_every_output(self, n):
        for q in enumerate_quadrangulations(n):
            res = optimal_from_quadrangulation(q)
            assert not isinstance(res, Rejected), res
            g = res.graph
            assert g.m == 4 * n - 8
            assert res.connectivity >= 4 and vertex_connectivity(g)[0] == res.connectivity
            assert validate_one_planar(res.drawing)
            assert is_connected(g) and len(set(g.edges())) == g.m
            skeleton = set(q.graph.edges())
            for pair in res.drawing.crossings:
                assert not (set(pair) & skeleton)


class TestSweep:
    def test_order8(self):
        rep = sweep_optimal_perfect([8])
        o = rep.orders[0]
        assert (o.optimal_graphs, o.perfect) == (1, 1)
        from onep.io import from_graph6

        assert are_isomorphic(from_graph6(o.perfect_witnesses[0]), complete_multipartite(2, 2, 2, 2))

    def test_orders_10_to_14(self):
        rep = sweep_optimal_perfect(range(8, 15))
        assert all(o.chordal == 0 for o in rep.orders)
        assert all(o.perfect == 0 for o in rep.orders if o.n >= 10)
        for o in rep.orders:
            if o.n >= 10:
                assert len(o.imperfection_witnesses) == o.optimal_graphs

    def test_worker_count_does_not_change_report(self):
        a = sweep_optimal_perfect(range(8, 14), workers=1).to_dict(with_timing=False)
        b = sweep_optimal_perfect(range(8, 14), workers=2).to_dict(with_timing=False)
        assert a == b

    def test_repeat_runs_identical(self):
        a = sweep_optimal_perfect(range(8, 13)).to_dict(with_timing=False)
        b = sweep_optimal_perfect(range(8, 13)).to_dict(with_timing=False)
        assert a == b

    def test_ingest_path(self):
        data = planar_code_bytes([q.rotation for n in range(8, 13) for q in enumerate_quadrangulations(n)])
        a = sweep_optimal_perfect(range(8, 13)).to_dict(with_timing=False)
        b = sweep_optimal_perfect(range(8, 13), ingest=data).to_dict(with_timing=False)
        assert b["source"] == "ingest"
        a.pop("source"), b.pop("source")
        assert a == b

    @pytest.mark.parametrize("orders", [[], [6, 7, 8], [30]])
    def test_range_errors(self, orders):
        with pytest.raises(SearchError):
            sweep_optimal_perfect(orders)
