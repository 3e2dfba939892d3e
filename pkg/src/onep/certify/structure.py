"""Checks tied to specific constructions: ring profiles of H_k, edge-density
bounds, and the three-colouring of double-stellated quadrangulations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from ..families import HkGraph, StellationRecord
from ..graph import Bipartition, Graph, GraphError, two_coloring

# |E(x, V(C_j))| for x on ring i, adjacent rings only
THETA_EXPECTED: dict[tuple[int, int], int] = {
    (1, 2): 3,
    (2, 1): 1,
    (2, 3): 2,
    (3, 2): 2,
    (3, 4): 1,
    (4, 3): 3,
}


@dataclass(frozen=True)
class ThetaTable:
    values: dict[tuple[int, int], int]

    def as_tuple(self) -> tuple[int, ...]:
        """(θ12, θ21, θ23, θ32, θ34, θ43)."""
        return tuple(self.values[key] for key in THETA_EXPECTED)


@dataclass(frozen=True)
class ThetaViolation:
    vertex: int
    ring: int
    other_ring: int
    expected: int
    found: int


def theta_profile(h: HkGraph) -> ThetaTable | ThetaViolation:
    """Check every vertex of every ring against the expected neighbour counts."""
    rings = [set(r) for r in h.rings]
    g = h.graph
    for x in range(g.n):
        i = h.ring_of(x)
        for j in (i - 1, i + 1):
            if not 1 <= j <= 4:
                continue
            found = sum(1 for w in g.adj[x] if w in rings[j - 1])
            expected = THETA_EXPECTED[(i, j)]
            if found != expected:
                return ThetaViolation(x, i, j, expected, found)
    return ThetaTable(dict(THETA_EXPECTED))


# ---------------------------------------------------------------------------
# Density
# ---------------------------------------------------------------------------

DensityClass = Literal["one_planar", "bipartite_one_planar", "optimal"]


def bipartite_one_planar_bound(n: int) -> int:
    """Maximum edge count of a bipartite 1-planar graph on n >= 4 vertices."""
    if n < 4:
        raise ValueError("the bipartite 1-planar bound is stated for n >= 4")
    if n % 2 == 0 and n != 6:
        return 3 * n - 8
    return 3 * n - 9


@dataclass(frozen=True)
class DensityVerdict:
    passed: bool
    density_class: str
    m: int
    bound: int

    def __bool__(self) -> bool:
        return self.passed


def density_check(g: Graph, density_class: DensityClass) -> DensityVerdict:
    n, m = g.n, g.m
    if density_class == "bipartite_one_planar":
        bound = bipartite_one_planar_bound(n)
        return DensityVerdict(m <= bound, density_class, m, bound)
    if n < 3:
        raise ValueError("the 4n - 8 bound is stated for n >= 3")
    bound = 4 * n - 8
    if density_class == "one_planar":
        return DensityVerdict(m <= bound, density_class, m, bound)
    if density_class == "optimal":
        return DensityVerdict(m == bound, density_class, m, bound)
    raise ValueError(f"unknown density class {density_class!r}")


# ---------------------------------------------------------------------------
# Three-colouring induced subgraphs of a double-stellated quadrangulation
# ---------------------------------------------------------------------------

RED, BLUE, THIRD = 0, 1, 2


def color_double_stellated(record: StellationRecord, vertices: Iterable[int]) -> dict[int, int]:
    """Colour the subgraph induced by ``vertices``.

    Base vertices inherit the 2-colouring of the quadrangulation. A stellating
    vertex whose neighbours in the subgraph all share one colour (or that has
    none) takes the opposite colour, blue when it has no neighbours; a
    stellating vertex seeing both colours takes the third colour. Stellating
    vertices are pairwise non-adjacent, so processing order is irrelevant.
    """
    chosen = set(vertices)
    g = record.graph
    for v in chosen:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    base = two_coloring(record.base.graph)
    if not isinstance(base, Bipartition):
        raise ValueError("base quadrangulation is not bipartite")
    n_q = record.base.n
    colour: dict[int, int] = {v: base.side[v] for v in sorted(chosen) if v < n_q}
    for w in sorted(v for v in chosen if v >= n_q):
        seen = {colour[x] for x in g.adj[w] if x in chosen}
        if seen == {RED}:
            colour[w] = BLUE
        elif seen == {BLUE}:
            colour[w] = RED
        elif not seen:
            colour[w] = BLUE
        else:
            colour[w] = THIRD
    return colour
