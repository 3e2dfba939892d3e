"""Exact clique number and chromatic number for desk-scale graphs."""

from __future__ import annotations

from ..graph import Bipartition, Graph, two_coloring


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def clique_number(g: Graph) -> tuple[int, list[int]]:
    """Maximum clique by branch and bound with a greedy-colouring bound (Tomita style)."""
    masks = g.masks
    best: list[int] = []

    def colour_sort(cand: int) -> list[tuple[int, int]]:
        # greedy colour classes; returns (vertex, colour bound) in ascending bound order
        out = []
        colour = 0
        rest = cand
        while rest:
            colour += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~(1 << v) & ~masks[v]
                rest &= ~(1 << v)
                out.append((v, colour))
        return out

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        order = colour_sort(cand)
        for v, bound in reversed(order):
            if len(clique) + bound <= len(best):
                return
            new = cand & masks[v]
            clique.append(v)
            if new:
                expand(clique, new)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    if g.n:
        expand([], (1 << g.n) - 1)
    return len(best), sorted(best)


def _dsatur_greedy(g: Graph) -> list[int]:
    n = g.n
    colour = [-1] * n
    sat: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max(
            (x for x in range(n) if colour[x] < 0),
            key=lambda x: (len(sat[x]), g.degree(x), -x),
        )
        c = 0
        while c in sat[v]:
            c += 1
        colour[v] = c
        for w in g.adj[v]:
            sat[w].add(c)
    return colour


def _k_colour(g: Graph, k: int, budget: list[int]) -> list[int] | None:
    """Backtracking k-colouring in DSATUR order; a fresh colour is only ever the lowest unused."""
    n = g.n
    colour = [-1] * n
    forbidden = [[0] * k for _ in range(n)]  # count of neighbours holding each colour
    sat = [0] * n

    def pick() -> int:
        best, key = -1, None
        for x in range(n):
            if colour[x] < 0:
                kx = (sat[x], g.degree(x))
                if key is None or kx > key:
                    best, key = x, kx
        return best

    def assign(v: int, c: int, delta: int) -> None:
        for w in g.adj[v]:
            before = forbidden[w][c]
            forbidden[w][c] += delta
            if (before == 0) != (forbidden[w][c] == 0):
                sat[w] += 1 if delta > 0 else -1

    def solve(done: int, used: int) -> bool:
        if done == n:
            return True
        budget[0] -= 1
        if budget[0] < 0:
            raise TimeoutError
        v = pick()
        for c in range(min(used + 1, k)):
            if forbidden[v][c]:
                continue
            colour[v] = c
            assign(v, c, 1)
            if solve(done + 1, max(used, c + 1)):
                return True
            assign(v, c, -1)
            colour[v] = -1
        return False

    return list(colour) if solve(0, 0) else None


def chromatic_number(g: Graph, budget: int = 10**7) -> tuple[int, list[int]]:
    """Exact chromatic number with a witness colouring (colours 0..chi-1).

    Lower bound from the clique number, upper bound from DSATUR, then
    iterative deepening on the colour count. Raises ``TimeoutError`` when the
    backtracking budget runs out.
    """
    if g.n == 0:
        return 0, []
    if g.m == 0:
        return 1, [0] * g.n
    coloring = two_coloring(g)
    if isinstance(coloring, Bipartition):
        return 2, list(coloring.side)
    lower, _ = clique_number(g)
    best = _dsatur_greedy(g)
    upper = max(best) + 1
    remaining = [budget]
    for k in range(lower, upper):
        found = _k_colour(g, k, remaining)
        if found is not None:
            return k, found
    return upper, best


def is_proper_coloring(g: Graph, colour: list[int] | dict[int, int]) -> bool:
    return all(colour[u] != colour[v] for u, v in g.edges())
