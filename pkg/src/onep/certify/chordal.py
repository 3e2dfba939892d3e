"""Chordality via lexicographic BFS, with hole extraction on failure."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..graph import Graph, shortest_path
from .certificates import PEO, HoleWitness


@dataclass(frozen=True)
class ChordalVerdict:
    chordal: bool
    certificate: PEO | HoleWitness

    def __bool__(self) -> bool:
        return self.chordal


def lex_bfs(g: Graph) -> list[int]:
    """Visit order of lexicographic BFS; ties broken towards the smaller vertex."""
    n = g.n
    # ordered partition refinement: list of cells, first cell is picked from
    cells: list[list[int]] = [list(range(n))] if n else []
    order: list[int] = []
    while cells:
        v = cells[0].pop(0)
        if not cells[0]:
            cells.pop(0)
        order.append(v)
        nb = g.nbr_sets[v]
        refined = []
        for cell in cells:
            inside = [w for w in cell if w in nb]
            outside = [w for w in cell if w not in nb]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        cells = refined
    return order


def _peo_violation(g: Graph, order: list[int]) -> tuple[int, int, int] | None:
    """First vertex whose later neighbours are not a clique, with a non-adjacent pair."""
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = sorted((w for w in g.adj[v] if pos[w] > pos[v]), key=pos.__getitem__)
        if len(later) < 2:
            continue
        parent = later[0]
        for w in later[1:]:
            if not g.has_edge(parent, w):
                return v, parent, w
    return None


def find_hole(g: Graph, hint: tuple[int, int, int] | None = None) -> tuple[int, ...] | None:
    """An induced cycle of length >= 4, or None if ``g`` is chordal.

    A hole through v with neighbours x, y on it exists exactly when x and y
    are non-adjacent and joined by a path avoiding the rest of N[v]; the
    shortest such path closes an induced cycle.
    """
    triples = []
    if hint is not None:
        triples.append(hint)
    for v in range(g.n):
        for x, y in combinations(g.adj[v], 2):
            if not g.has_edge(x, y):
                triples.append((v, x, y))
    for v, x, y in triples:
        banned = set(g.adj[v]) | {v}
        allowed = set(range(g.n)) - banned
        path = shortest_path(g, x, y, allowed)
        if path is not None:
            return (v, *path)
    return None


def is_chordal(g: Graph) -> ChordalVerdict:
    order = lex_bfs(g)[::-1]
    bad = _peo_violation(g, order)
    if bad is None:
        return ChordalVerdict(True, PEO(tuple(order)))
    hole = find_hole(g, bad)
    if hole is None:
        raise AssertionError("lex-BFS order failed but no hole found")
    return ChordalVerdict(False, HoleWitness(hole))
