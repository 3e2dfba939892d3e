"""Combinatorial 1-planar drawings: an edge list plus a pairing of crossing edges.

A drawing is accepted when every edge crosses at most once, paired edges are
independent, and the planarization (each crossing replaced by a degree-4
dummy vertex) is planar.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import networkx as nx

from .graph import Graph, make_graph

Edge = tuple[int, int]


class DrawingError(ValueError):
    pass


def _norm(e: Iterable[int]) -> Edge:
    u, v = e
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class OnePlanarDrawing:
    graph: Graph
    crossings: tuple[tuple[Edge, Edge], ...] = field(default=())

    @classmethod
    def build(cls, graph: Graph, crossings: Iterable[tuple[Iterable[int], Iterable[int]]] = ()) -> "OnePlanarDrawing":
        """Normalise edge orientation and pair order; pairs are kept sorted."""
        pairs = set()
        for e, f in crossings:
            e, f = _norm(e), _norm(f)
            pairs.add((e, f) if e < f else (f, e))
        return cls(graph, tuple(sorted(pairs)))

    @property
    def crossed_edges(self) -> set[Edge]:
        return {e for pair in self.crossings for e in pair}


@dataclass(frozen=True)
class Verdict:
    valid: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.valid


def is_planar(g: Graph) -> bool:
    """Exact planarity test (left-right criterion, via networkx)."""
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    planar, _ = nx.check_planarity(h)
    return planar


def _pair_violation(d: OnePlanarDrawing) -> str | None:
    seen: dict[Edge, tuple[Edge, Edge]] = {}
    for pair in d.crossings:
        e, f = pair
        for x in pair:
            if not d.graph.has_edge(*x):
                return f"crossing pair {pair} uses non-edge {x}"
            if x in seen:
                return f"edge {x} crosses more than once: {seen[x]} and {pair}"
            seen[x] = pair
        if e == f:
            return f"edge {e} paired with itself"
        if set(e) & set(f):
            return f"crossing pair {pair} shares an endpoint"
    return None


def planarize(d: OnePlanarDrawing) -> Graph:
    """Replace crossing pair ``i`` by dummy vertex ``n + i`` joined to the four endpoints."""
    problem = _pair_violation(d)
    if problem:
        raise DrawingError(problem)
    n = d.graph.n
    crossed = d.crossed_edges
    edges = [e for e in d.graph.edges() if e not in crossed]
    for i, (e, f) in enumerate(d.crossings):
        c = n + i
        edges.extend((c, x) for x in (*e, *f))
    return make_graph(n + len(d.crossings), edges)


def validate_one_planar(d: OnePlanarDrawing) -> Verdict:
    problem = _pair_violation(d)
    if problem:
        return Verdict(False, problem)
    p = planarize(d)
    if not is_planar(p):
        return Verdict(False, f"planarization ({p.n} vertices, {p.m} edges) is not planar")
    return Verdict(True)
