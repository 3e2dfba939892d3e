"""Perfection checks.

``spgt`` mode looks for odd holes in G and in its complement, relying on the
strong perfect graph theorem. ``oracle`` mode compares clique number and
chromatic number on every induced subgraph by subset dynamic programming.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

from ..graph import Bipartition, Graph, complement, two_coloring
from .certificates import PEO, Certificate, ImperfectSubgraph, OddAntihole, OddHole
from .chordal import is_chordal

ORACLE_MAX_N = 12


@dataclass(frozen=True)
class PerfectVerdict:
    perfect: bool
    method: str
    witness: Certificate | None = None

    def __bool__(self) -> bool:
        return self.perfect


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def induced_cycles(g: Graph, min_len: int = 4, odd_only: bool = False) -> Iterator[tuple[int, ...]]:
    """Every induced cycle of length >= ``min_len``, each exactly once.

    The cycle is grown from its smallest vertex ``s`` along induced paths
    through larger vertices; it closes at the first vertex adjacent to ``s``
    and is reported in the direction where the second vertex is smaller than
    the last.
    """
    masks = g.masks
    n = g.n
    for s in range(n):
        allowed = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        ms = masks[s]
        for p1 in _bits(ms & allowed):
            path = [s, p1]
            # vertices that may never appear later: path + neighbours of interior vertices
            yield from _extend(masks, ms, allowed, path, (1 << s) | (1 << p1), min_len, odd_only)


def _extend(masks, ms, allowed, path, blocked, min_len, odd_only):
    last = path[-1]
    for y in _bits(masks[last] & allowed & ~blocked):
        if (ms >> y) & 1:
            length = len(path) + 1
            if length >= min_len and y > path[1] and (not odd_only or length % 2 == 1):
                yield (*path, y)
            continue
        path.append(y)
        yield from _extend(masks, ms, allowed, path, blocked | masks[last] | (1 << y), min_len, odd_only)
        path.pop()


def find_odd_hole(g: Graph) -> tuple[int, ...] | None:
    return next(induced_cycles(g, min_len=5, odd_only=True), None)


def _spgt(g: Graph) -> PerfectVerdict:
    coloring = two_coloring(g)
    if isinstance(coloring, Bipartition):
        return PerfectVerdict(True, "bipartite")
    chordal = is_chordal(g)
    if chordal.chordal:
        return PerfectVerdict(True, "chordal", chordal.certificate)
    hole = find_odd_hole(g)
    if hole is not None:
        return PerfectVerdict(False, "spgt", OddHole(hole))
    antihole = find_odd_hole(complement(g))
    if antihole is not None:
        return PerfectVerdict(False, "spgt", OddAntihole(antihole))
    return PerfectVerdict(True, "spgt")


def subset_tables(g: Graph) -> tuple[list[int], list[int]]:
    """Clique number and chromatic number of every induced subgraph, indexed by vertex mask."""
    n = g.n
    masks = g.masks
    size = 1 << n
    omega = [0] * size
    indep = [False] * size
    indep[0] = True
    for s in range(1, size):
        low = (s & -s).bit_length() - 1
        rest = s & (s - 1)
        omega[s] = max(omega[rest], 1 + omega[rest & masks[low]])
        indep[s] = indep[rest] and not (masks[low] & rest)
    chi = [0] * size
    for s in range(1, size):
        lowbit = s & -s
        rest = s ^ lowbit
        best = n
        sub = rest
        while True:
            cls = sub | lowbit
            if indep[cls]:
                c = 1 + chi[s ^ cls]
                if c < best:
                    best = c
            if sub == 0:
                break
            sub = (sub - 1) & rest
        chi[s] = best
    return omega, chi


def _oracle(g: Graph) -> PerfectVerdict:
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"oracle mode is limited to n <= {ORACLE_MAX_N}, got {g.n}")
    omega, chi = subset_tables(g)
    for s in sorted(range(1 << g.n), key=lambda x: (x.bit_count(), x)):
        if omega[s] != chi[s]:
            verts = tuple(_bits(s))
            return PerfectVerdict(False, "oracle", ImperfectSubgraph(verts, omega[s], chi[s]))
    return PerfectVerdict(True, "oracle")


def is_perfect(g: Graph, mode: Literal["spgt", "oracle"] = "spgt") -> PerfectVerdict:
    if mode == "spgt":
        return _spgt(g)
    if mode == "oracle":
        return _oracle(g)
    raise ValueError(f"unknown mode {mode!r}")


__all__ = ["PEO", "PerfectVerdict", "find_odd_hole", "induced_cycles", "is_perfect", "subset_tables"]
