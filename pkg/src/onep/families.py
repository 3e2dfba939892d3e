"""The graph families: K_{2,n}, double-stellated quadrangulations, H_k, G_k, K_{2,2,2,2}.

Every builder that has a drawing attaches an explicit crossing-pair
assignment; nothing here trusts it, the drawing validator checks it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .drawing import OnePlanarDrawing
from .graph import Graph, complete_bipartite, make_graph
from .plane import PlaneQuadrangulation, pseudo_double_wheel


class FamilyError(ValueError):
    pass


def build_k2n(n: int) -> Graph:
    """K_{2,n}: vertices 0 and 1 form the 2-side."""
    if n < 3:
        raise FamilyError("K_{2,n} is used for n >= 3")
    return complete_bipartite(2, n)


def build_pseudo_double_wheel(r: int) -> PlaneQuadrangulation:
    if r < 3:
        raise FamilyError("pseudo-double wheels need r >= 3")
    return pseudo_double_wheel(r)


# ---------------------------------------------------------------------------
# Double stellation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StellationRecord:
    base: PlaneQuadrangulation
    graph: Graph
    stellating: tuple[tuple[int, int], ...]  # per face of base.faces
    drawing: OnePlanarDrawing

    @property
    def base_vertices(self) -> list[int]:
        return list(range(self.base.n))

    @property
    def stellating_vertices(self) -> list[int]:
        return [s for pair in self.stellating for s in pair]


def double_stellate(q: PlaneQuadrangulation) -> StellationRecord:
    """Insert two vertices into every face, each joined to the four corners.

    In face (w1, w2, w3, w4) the first new vertex s1 is drawn uncrossed; the
    second, s2, sits in the triangle (w1, s1, w2) and reaches w3 and w4 by
    crossing s1w2 and s1w1 respectively.
    """
    if not q.is_valid():
        raise FamilyError("input is not a valid plane quadrangulation")
    n_q = q.n
    edges = list(q.graph.edges())
    stellating = []
    crossings = []
    for f, (w1, w2, w3, w4) in enumerate(q.faces):
        s1, s2 = n_q + 2 * f, n_q + 2 * f + 1
        stellating.append((s1, s2))
        for s in (s1, s2):
            edges.extend((s, w) for w in (w1, w2, w3, w4))
        crossings.append(((s2, w3), (s1, w2)))
        crossings.append(((s2, w4), (s1, w1)))
    g = make_graph(n_q + 2 * len(q.faces), edges)
    return StellationRecord(q, g, tuple(stellating), OnePlanarDrawing.build(g, crossings))


# ---------------------------------------------------------------------------
# H_k and G_k
# ---------------------------------------------------------------------------


def _check_k(k: int) -> None:
    if k < 10 or k % 2:
        raise FamilyError(f"k must be even and at least 10, got {k}")


@dataclass(frozen=True)
class HkGraph:
    """H_k with its four rings C1 (b), C2 (u), C3 (v), C4 (a).

    Role accessors take the 1-based subscripts used for the rings and wrap
    around the ring length, so ``u(3k + 2) == u(2)``.
    """

    k: int
    graph: Graph
    drawing: OnePlanarDrawing

    def _ring(self, base: int, length: int, j: int) -> int:
        return base + (j - 1) % length

    def b(self, i: int) -> int:
        return self._ring(0, self.k, i)

    def u(self, j: int) -> int:
        return self._ring(self.k, 3 * self.k, j)

    def v(self, j: int) -> int:
        return self._ring(4 * self.k, 3 * self.k, j)

    def a(self, i: int) -> int:
        return self._ring(7 * self.k, self.k, i)

    @property
    def rings(self) -> tuple[list[int], list[int], list[int], list[int]]:
        k = self.k
        return (
            [self.b(i) for i in range(1, k + 1)],
            [self.u(j) for j in range(1, 3 * k + 1)],
            [self.v(j) for j in range(1, 3 * k + 1)],
            [self.a(i) for i in range(1, k + 1)],
        )

    def ring_of(self, x: int) -> int:
        """Ring number 1..4 of vertex ``x``."""
        k = self.k
        if x < k:
            return 1
        if x < 4 * k:
            return 2
        if x < 7 * k:
            return 3
        return 4


def _hk_edges(k: int, h: HkGraph) -> tuple[list[tuple[int, int]], list]:
    b, u, v, a = h.b, h.u, h.v, h.a
    edges = []
    for i in range(1, k + 1):
        edges.append((b(i), b(i + 1)))
        edges.append((a(i), a(i + 1)))
    for j in range(1, 3 * k + 1):
        edges.append((u(j), u(j + 1)))
        edges.append((v(j), v(j + 1)))
    for i in range(1, k + 1):
        edges += [(b(i), u(3 * i - 2)), (b(i), u(3 * i)), (b(i), u(3 * i + 2))]
        edges += [(a(i), v(3 * i - 2)), (a(i), v(3 * i)), (a(i), v(3 * i + 2))]
    for j in range(1, 3 * k + 1):
        edges += [(u(j), v(j - 1)), (u(j), v(j + 1))]
    crossings = []
    for i in range(1, k + 1):
        crossings.append(((b(i), u(3 * i + 2)), (b(i + 1), u(3 * i + 1))))
        crossings.append(((a(i), v(3 * i + 2)), (a(i + 1), v(3 * i + 1))))
    for j in range(1, 3 * k + 1):
        crossings.append(((u(j), v(j + 1)), (u(j + 1), v(j))))
    return edges, crossings


def build_hk(k: int) -> HkGraph:
    _check_k(k)
    empty = make_graph(8 * k, [])
    shell = HkGraph(k, empty, OnePlanarDrawing(empty))
    edges, crossings = _hk_edges(k, shell)
    g = make_graph(8 * k, edges)
    return HkGraph(k, g, OnePlanarDrawing.build(g, crossings))


@dataclass(frozen=True)
class GkGraph:
    base: HkGraph
    graph: Graph
    apex: int
    apex_neighbors: tuple[int, ...]
    drawing: OnePlanarDrawing


def build_gk(k: int) -> GkGraph:
    """H_k plus an apex inside C1 joined to b_1, b_3, b_5, b_7, b_9 by uncrossed edges."""
    hk = build_hk(k)
    apex = 8 * k
    nbrs = tuple(hk.b(i) for i in (1, 3, 5, 7, 9))
    g = make_graph(8 * k + 1, hk.graph.edges() + [(apex, w) for w in nbrs])
    return GkGraph(hk, g, apex, nbrs, OnePlanarDrawing.build(g, hk.drawing.crossings))


# ---------------------------------------------------------------------------
# Optimal 1-planar graphs from quadrangulations
# ---------------------------------------------------------------------------


def face_diagonals(q: PlaneQuadrangulation) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    return [((w1, w3), (w2, w4)) for (w1, w2, w3, w4) in q.faces]


def add_crossing_diagonals(q: PlaneQuadrangulation) -> tuple[Graph, OnePlanarDrawing, list[tuple[int, int]]]:
    """Skeleton plus both diagonals of every face, the two diagonals crossing.

    Returns the graph, its drawing, and the list of diagonals that coincide
    with an edge already present (empty for a simple result).
    """
    skeleton = q.graph
    present = {tuple(sorted(e)) for e in skeleton.edges()}
    clashes = []
    pairs = face_diagonals(q)
    for pair in pairs:
        for e in pair:
            key = tuple(sorted(e))
            if key in present:
                clashes.append(key)
            present.add(key)
    g = make_graph(q.n, present)
    return g, OnePlanarDrawing.build(g, pairs), clashes


def build_k2222() -> tuple[Graph, OnePlanarDrawing]:
    """K_{2,2,2,2} drawn as the cube with a crossing diagonal pair in each face."""
    g, drawing, clashes = add_crossing_diagonals(pseudo_double_wheel(3))
    assert not clashes
    return g, drawing
