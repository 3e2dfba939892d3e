"""Hamiltonicity: cheap obstructions first, then budgeted backtracking."""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from typing import Iterable, Literal

from ..graph import Bipartition, Graph, GraphError, connected_components, two_coloring
from .certificates import (
    Certificate,
    HamiltonianCycle,
    ParityImbalance,
    ToughnessViolation,
)

DEFAULT_BUDGET = 10**8


def default_budget() -> int:
    return int(os.environ.get("ONEP_BUDGET", DEFAULT_BUDGET))


@dataclass(frozen=True)
class HamiltonVerdict:
    status: Literal["yes", "no", "unknown"]
    reason: Literal["cycle", "certificate", "exhausted", "budget", "cancelled"]
    certificate: Certificate | None = None
    expansions: int = 0


def parity_certificate(g: Graph) -> ParityImbalance | None:
    """Unequal sides of a connected bipartite graph rule out a Hamiltonian cycle."""
    if g.n == 0 or len(connected_components(g)) != 1:
        return None
    coloring = two_coloring(g)
    if not isinstance(coloring, Bipartition):
        return None
    x, y = coloring.sizes
    return ParityImbalance(x, y) if x != y else None


def toughness_certificate(g: Graph, s: Iterable[int]) -> ToughnessViolation | None:
    """Violation when removing ``s`` leaves more than ``|s|`` components."""
    s = tuple(sorted(set(s)))
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    if not s:
        return None
    c = len(connected_components(g, s))
    return ToughnessViolation(s, c) if c > len(s) else None


def _cut_vertex_certificate(g: Graph) -> ToughnessViolation | None:
    comps = connected_components(g)
    if len(comps) > 1:
        biggest = max(comps, key=len)
        for v in biggest if len(biggest) > 1 else range(g.n):
            cert = toughness_certificate(g, [v])
            if cert:
                return cert
    for v in range(g.n):
        cert = toughness_certificate(g, [v])
        if cert:
            return cert
    return None


def _independent_set_certificate(g: Graph) -> ToughnessViolation | None:
    """Greedy independent set by ascending degree; its complement is the candidate S."""
    taken: list[int] = []
    blocked = 0
    for v in sorted(range(g.n), key=lambda x: (g.degree(x), x)):
        if not (blocked >> v) & 1:
            taken.append(v)
            blocked |= g.masks[v] | (1 << v)
    chosen = set(taken)
    return toughness_certificate(g, [v for v in range(g.n) if v not in chosen])


def obstruction(g: Graph) -> Certificate | None:
    return parity_certificate(g) or _cut_vertex_certificate(g) or _independent_set_certificate(g)


class _Stop(Exception):
    pass


def _search(g: Graph, budget: int, cancel: threading.Event | None) -> tuple[list[int] | None, int, str]:
    n = g.n
    masks = g.masks
    full = (1 << n) - 1
    start = min(range(n), key=lambda v: (g.degree(v), v))
    start_bit = 1 << start
    path = [start]
    counter = [0]

    def connected(region: int, seed: int) -> bool:
        seen = 1 << seed
        frontier = seen
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= masks[v]
            nxt &= region & ~seen
            seen |= nxt
            frontier = nxt
        return seen & region == region

    def rec(end: int, unvisited: int) -> bool:
        counter[0] += 1
        if counter[0] > budget:
            raise _Stop("budget")
        # polled on the first expansion and every 1024 after
        if cancel is not None and counter[0] & 0x3FF == 1 and cancel.is_set():
            raise _Stop("cancelled")
        if not unvisited:
            return bool((masks[end] >> start) & 1)
        if not masks[start] & unvisited:
            return False
        if not connected(unvisited | (1 << end), end):
            return False
        avail_pool = unvisited | (1 << end) | start_bit
        forced = -1
        remaining = unvisited.bit_count()
        for u in _bits(unvisited):
            nb = masks[u] & avail_pool
            deg = nb.bit_count()
            if deg < 2:
                return False
            if end != start and deg == 2 and (nb >> end) & 1:
                if (nb & start_bit) and remaining > 1:
                    return False
                if forced >= 0:
                    return False
                forced = u
        if forced >= 0:
            choices = [forced]
        else:
            cand = masks[end] & unvisited
            choices = sorted(_bits(cand), key=lambda u: ((masks[u] & avail_pool).bit_count(), u))
        for u in choices:
            path.append(u)
            if rec(u, unvisited & ~(1 << u)):
                return True
            path.pop()
        return False

    try:
        found = rec(start, full & ~start_bit)
    except _Stop as stop:
        return None, counter[0], str(stop)
    return (list(path) if found else None), counter[0], "exhausted"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_hamiltonian(
    g: Graph,
    budget: int | None = None,
    cancel: threading.Event | None = None,
    use_certificates: bool = True,
) -> HamiltonVerdict:
    if g.n < 3:
        raise ValueError("Hamiltonicity is defined here for n >= 3")
    if use_certificates:
        cert = obstruction(g)
        if cert is not None:
            if not cert.verify(g):
                raise AssertionError(f"obstruction {cert} failed re-verification")
            return HamiltonVerdict("no", "certificate", cert)
    cycle, expansions, outcome = _search(g, default_budget() if budget is None else budget, cancel)
    if cycle is not None:
        cert = HamiltonianCycle(tuple(cycle))
        if not cert.verify(g):
            raise AssertionError("search returned an invalid cycle")
        return HamiltonVerdict("yes", "cycle", cert, expansions)
    if outcome == "exhausted":
        return HamiltonVerdict("no", "exhausted", None, expansions)
    return HamiltonVerdict("unknown", outcome, None, expansions)  # type: ignore[arg-type]
