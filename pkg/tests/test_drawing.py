import pytest

from onep import families
from onep.drawing import (
    DrawingError,
    OnePlanarDrawing,
    is_planar,
    planarize,
    validate_one_planar,
)
from onep.graph import (
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    cube_graph,
    petersen_graph,
)


def family_drawings():
    out = []
    for r in range(3, 7):
        rec = families.double_stellate(families.build_pseudo_double_wheel(r))
        out.append((f"qs_pw{r}", rec.drawing))
    for k in (10, 12, 14):
        out.append((f"h{k}", families.build_hk(k).drawing))
        out.append((f"g{k}", families.build_gk(k).drawing))
    out.append(("k2222", families.build_k2222()[1]))
    return out


DRAWINGS = family_drawings()


@pytest.mark.parametrize("name,drawing", DRAWINGS, ids=[n for n, _ in DRAWINGS])
def test_family_drawings_valid(name, drawing):
    verdict = validate_one_planar(drawing)
    assert verdict, verdict.reason
    p = planarize(drawing)
    c = len(drawing.crossings)
    assert p.n == drawing.graph.n + c
    assert p.m == drawing.graph.m + 2 * c


def test_no_crossings_is_identity():
    g = cube_graph()
    assert planarize(OnePlanarDrawing.build(g)) == g


def test_k5_standard_drawing():
    d = OnePlanarDrawing.build(complete_graph(5), [((0, 2), (1, 3))])
    p = planarize(d)
    assert (p.n, p.m) == (6, 12)
    assert validate_one_planar(d)


def test_h10_planarization_size():
    d = families.build_hk(10).drawing
    assert len(d.crossings) == 50
    assert planarize(d).n == 130


def test_cube_without_crossings_valid():
    assert validate_one_planar(OnePlanarDrawing.build(cube_graph()))


def test_k5_without_crossings_invalid():
    verdict = validate_one_planar(OnePlanarDrawing.build(complete_graph(5)))
    assert not verdict and "not planar" in verdict.reason


@pytest.mark.parametrize(
    "pairs,fragment",
    [
        ([((0, 1), (0, 2))], "shares an endpoint"),
        ([((0, 2), (1, 3)), ((0, 2), (1, 4))], "more than once"),
        ([((0, 2), (1, 9))], "non-edge"),
    ],
)
def test_malformed_pairs(pairs, fragment):
    d = OnePlanarDrawing(complete_graph(5), tuple(pairs))
    verdict = validate_one_planar(d)
    assert not verdict and fragment in verdict.reason
    with pytest.raises(DrawingError):
        planarize(d)


def test_planarity():
    assert is_planar(complete_graph(4))
    assert not is_planar(complete_bipartite(3, 3))
    assert not is_planar(complete_multipartite(2, 2, 2, 2))
    assert not is_planar(petersen_graph())


def test_qs_cube_planarization_is_32_vertices():
    rec = families.double_stellate(families.build_pseudo_double_wheel(3))
    assert planarize(rec.drawing).n == 32
