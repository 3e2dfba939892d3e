"""Vertex connectivity by unit-capacity max flow on the split digraph.

Pair schedule (Esfahanian-Hakimi): with ``s`` of minimum degree, a minimum
separator either avoids ``s``, and then separates ``s`` from some
non-neighbour, or contains ``s``, and then separates two non-adjacent
neighbours of ``s``. Those pairs suffice.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations

from ..graph import Graph, add_vertex
from .certificates import CompleteGraphMarker, Separator


def _local_cut(g: Graph, s: int, t: int, limit: int) -> tuple[int, list[int]]:
    """Vertex-disjoint s-t path count (capped at ``limit``) and a separator when below it.

    Vertex ``v`` splits into ``2v`` (in) and ``2v + 1`` (out); arc in->out has
    capacity 1 except for s and t. Original edges become out->in arcs of
    unbounded capacity in both directions.
    """
    # residual capacities, sparse
    cap: dict[int, dict[int, int]] = {}

    def arc(x: int, y: int, c: int) -> None:
        cap.setdefault(x, {})
        cap.setdefault(y, {})
        cap[x][y] = cap[x].get(y, 0) + c
        cap[y].setdefault(x, 0)

    big = g.n + 1
    for v in range(g.n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)
    source, sink = 2 * s + 1, 2 * t

    flow = 0
    while flow < limit:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            x = queue.popleft()
            for y, c in cap[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if sink not in parent:
            break
        y = sink
        while y != source:
            x = parent[y]
            cap[x][y] -= 1
            cap[y][x] += 1
            y = x
        flow += 1
    if flow >= limit:
        return flow, []
    # reachable set of the final residual graph gives the cut
    reach = {source}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y, c in cap[x].items():
            if c > 0 and y not in reach:
                reach.add(y)
                queue.append(y)
    cut = [v for v in range(g.n) if 2 * v in reach and 2 * v + 1 not in reach]
    return flow, cut


def local_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally vertex-disjoint s-t paths for non-adjacent s, t."""
    if g.has_edge(s, t) or s == t:
        raise ValueError("local vertex connectivity needs distinct non-adjacent vertices")
    flow, _ = _local_cut(g, s, t, g.n)
    return flow


def vertex_connectivity(g: Graph) -> tuple[int, Separator | CompleteGraphMarker]:
    n = g.n
    if n == 0:
        raise ValueError("connectivity of the empty graph is undefined")
    if g.m == n * (n - 1) // 2:
        return n - 1, CompleteGraphMarker()
    s = min(range(n), key=lambda v: (g.degree(v), v))
    best = g.degree(s)
    best_cut = list(g.adj[s])  # isolates s; valid since g is not complete
    if best_cut == [] and n > 1:
        return 0, Separator(())

    pairs = [(s, t) for t in range(n) if t != s and not g.has_edge(s, t)]
    pairs += [(x, y) for x, y in combinations(g.adj[s], 2) if not g.has_edge(x, y)]
    for x, y in pairs:
        flow, cut = _local_cut(g, x, y, best)
        if flow < best:
            best, best_cut = flow, cut
            if best == 0:
                break
    sep = Separator(tuple(sorted(best_cut)))
    if not sep.verify(g) or len(sep.vertices) != best:
        raise AssertionError("separator failed re-verification")
    return best, sep


def is_k_connected(g: Graph, k: int) -> bool:
    return g.n > k and vertex_connectivity(g)[0] >= k


def verify_apex_extension(g: Graph, k: int, attach: list[int]) -> tuple[bool, int]:
    """Join a new vertex to ``attach`` (at least k vertices of a k-connected g) and recheck.

    Returns ``(holds, connectivity_of_result)``.
    """
    if len(set(attach)) < k:
        raise ValueError(f"need at least {k} attachment vertices")
    kappa, _ = vertex_connectivity(g)
    if kappa < k:
        raise ValueError(f"input graph is only {kappa}-connected")
    h = add_vertex(g, sorted(set(attach)))
    kh, _ = vertex_connectivity(h)
    return kh >= k, kh
