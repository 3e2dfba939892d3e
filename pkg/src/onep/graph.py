"""Simple undirected graphs on vertices 0..n-1 and the basic operations on them."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, loops, bad vertex sets)."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``adj[v]`` is the sorted tuple of neighbours of ``v``."""

    n: int
    adj: tuple[tuple[int, ...], ...] = field(repr=False)

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitsets."""
        out = []
        for nbrs in self.adj:
            mask = 0
            for w in nbrs:
                mask |= 1 << w
            out.append(mask)
        return tuple(out)

    @cached_property
    def nbr_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph; repeated pairs collapse to one edge."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def from_masks(masks: Sequence[int]) -> Graph:
    n = len(masks)
    adj = []
    for v, mask in enumerate(masks):
        adj.append(tuple(w for w in range(n) if (mask >> w) & 1))
    g = make_graph(n, [(v, w) for v in range(n) for w in adj[v]])
    return g


def _check_vertices(g: Graph, vertices: Iterable[int]) -> list[int]:
    out = []
    for v in vertices:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
        out.append(v)
    return out


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``(H, index_map)`` where ``index_map[i]`` is the original id of vertex ``i`` of H.

    Vertices of H keep the ascending order of their original ids.
    """
    keep = sorted(set(_check_vertices(g, vertices)))
    new_id = {v: i for i, v in enumerate(keep)}
    edges = [
        (new_id[u], new_id[w])
        for u in keep
        for w in g.adj[u]
        if u < w and w in new_id
    ]
    return make_graph(len(keep), edges), keep


def delete_vertices(g: Graph, removed: Iterable[int]) -> tuple[Graph, list[int]]:
    gone = set(_check_vertices(g, removed))
    return induced_subgraph(g, [v for v in range(g.n) if v not in gone])


def complement(g: Graph) -> Graph:
    return make_graph(
        g.n,
        [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)],
    )


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Rename vertex ``v`` to ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabelling is not a permutation of the vertex set")
    return make_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def add_vertex(g: Graph, neighbours: Iterable[int]) -> Graph:
    """Append vertex ``g.n`` joined to ``neighbours``."""
    nb = _check_vertices(g, neighbours)
    return make_graph(g.n + 1, g.edges() + [(g.n, w) for w in nb])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return make_graph(offset, edges)


# ---------------------------------------------------------------------------
# Standard small graphs
# ---------------------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complete_multipartite(*sizes: int) -> Graph:
    part = []
    for p, s in enumerate(sizes):
        part.extend([p] * s)
    n = len(part)
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]])


def cube_graph() -> Graph:
    """The 3-cube with vertices as 3-bit words."""
    return make_graph(8, [(v, v ^ (1 << b)) for v in range(8) for b in range(3)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(10, outer + spokes + inner)


# ---------------------------------------------------------------------------
# Traversal
# ---------------------------------------------------------------------------


def connected_components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Components of ``g`` minus ``removed``, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    for v in removed:
        seen[v] = True
    blocks = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        block = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    block.append(w)
                    queue.append(w)
        blocks.append(sorted(block))
    return blocks


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def bfs_distances(g: Graph, source: int, allowed: set[int] | None = None) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in dist and (allowed is None or w in allowed):
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def shortest_path(g: Graph, source: int, target: int, allowed: set[int] | None = None) -> list[int] | None:
    """Shortest path using only vertices in ``allowed`` (endpoints always allowed)."""
    parent = {source: -1}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u == target:
            path = [u]
            while parent[path[-1]] != -1:
                path.append(parent[path[-1]])
            return path[::-1]
        for w in g.adj[u]:
            if w in parent:
                continue
            if allowed is not None and w not in allowed and w != target:
                continue
            parent[w] = u
            queue.append(w)
    return None


# ---------------------------------------------------------------------------
# Bipartiteness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Bipartition:
    """``side[v]`` is 0 (class X) or 1 (class Y)."""

    side: tuple[int, ...]

    @property
    def X(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == 0]

    @property
    def Y(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == 1]

    @property
    def sizes(self) -> tuple[int, int]:
        y = sum(self.side)
        return len(self.side) - y, y


@dataclass(frozen=True)
class OddCycle:
    cycle: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cycle)


def two_coloring(g: Graph) -> Bipartition | OddCycle:
    """BFS 2-colouring; the smallest vertex of every component lands in X.

    On failure the returned odd cycle is simple: the two tree paths from the
    offending edge's endpoints to their lowest common ancestor.
    """
    side = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif side[w] == side[u]:
                    return OddCycle(_tree_cycle(u, w, parent, depth))
    return Bipartition(tuple(side))


def _tree_cycle(u: int, w: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    left, right = [u], [w]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    right.pop()
    return tuple(left + right[::-1])


def is_bipartite(g: Graph) -> bool:
    return isinstance(two_coloring(g), Bipartition)
