"""Verdict witnesses. Each one re-checks itself against a graph without
trusting the algorithm that produced it."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Any, ClassVar

from ..graph import Bipartition, Graph, complement, connected_components, two_coloring


@dataclass(frozen=True)
class Certificate:
    kind: ClassVar[str] = "certificate"

    def verify(self, g: Graph) -> bool:
        raise NotImplementedError

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind}
        for key, value in asdict(self).items():
            out[key] = list(value) if isinstance(value, tuple) else value
        return out


@dataclass(frozen=True)
class Separator(Certificate):
    kind: ClassVar[str] = "separator"
    vertices: tuple[int, ...]

    def verify(self, g: Graph) -> bool:
        return len(connected_components(g, self.vertices)) >= 2


@dataclass(frozen=True)
class CompleteGraphMarker(Certificate):
    kind: ClassVar[str] = "complete"

    def verify(self, g: Graph) -> bool:
        return g.m == g.n * (g.n - 1) // 2


@dataclass(frozen=True)
class HamiltonianCycle(Certificate):
    kind: ClassVar[str] = "hamiltonian_cycle"
    cycle: tuple[int, ...]

    def verify(self, g: Graph) -> bool:
        c = self.cycle
        if g.n < 3 or len(c) != g.n or sorted(c) != list(range(g.n)):
            return False
        return all(g.has_edge(c[i - 1], c[i]) for i in range(len(c)))


@dataclass(frozen=True)
class ParityImbalance(Certificate):
    kind: ClassVar[str] = "parity_imbalance"
    x_size: int
    y_size: int

    def verify(self, g: Graph) -> bool:
        # the bipartition is unique only for connected graphs
        if len(connected_components(g)) != 1:
            return False
        coloring = two_coloring(g)
        if not isinstance(coloring, Bipartition):
            return False
        return sorted(coloring.sizes) == sorted((self.x_size, self.y_size)) and self.x_size != self.y_size


@dataclass(frozen=True)
class ToughnessViolation(Certificate):
    kind: ClassVar[str] = "toughness_violation"
    vertices: tuple[int, ...]
    components: int

    def verify(self, g: Graph) -> bool:
        if not self.vertices:
            return False
        c = len(connected_components(g, self.vertices))
        return c == self.components and c > len(self.vertices)


def _is_induced_cycle(g: Graph, cycle: tuple[int, ...]) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    for i, j in combinations(range(k), 2):
        adjacent = (j - i) in (1, k - 1)
        if g.has_edge(cycle[i], cycle[j]) != adjacent:
            return False
    return True


@dataclass(frozen=True)
class OddHole(Certificate):
    kind: ClassVar[str] = "odd_hole"
    cycle: tuple[int, ...]

    def verify(self, g: Graph) -> bool:
        return len(self.cycle) >= 5 and len(self.cycle) % 2 == 1 and _is_induced_cycle(g, self.cycle)


@dataclass(frozen=True)
class OddAntihole(Certificate):
    """``cycle`` is an induced odd cycle of the complement."""

    kind: ClassVar[str] = "odd_antihole"
    cycle: tuple[int, ...]

    def verify(self, g: Graph) -> bool:
        return len(self.cycle) >= 5 and len(self.cycle) % 2 == 1 and _is_induced_cycle(complement(g), self.cycle)


@dataclass(frozen=True)
class HoleWitness(Certificate):
    kind: ClassVar[str] = "hole"
    cycle: tuple[int, ...]

    def verify(self, g: Graph) -> bool:
        return len(self.cycle) >= 4 and _is_induced_cycle(g, self.cycle)


@dataclass(frozen=True)
class PEO(Certificate):
    """Perfect elimination ordering: later neighbours of each vertex form a clique."""

    kind: ClassVar[str] = "peo"
    order: tuple[int, ...]

    def verify(self, g: Graph) -> bool:
        if sorted(self.order) != list(range(g.n)):
            return False
        pos = {v: i for i, v in enumerate(self.order)}
        for v in self.order:
            later = [w for w in g.adj[v] if pos[w] > pos[v]]
            if any(not g.has_edge(x, y) for x, y in combinations(later, 2)):
                return False
        return True


@dataclass(frozen=True)
class ImperfectSubgraph(Certificate):
    """Induced subgraph with clique number below chromatic number."""

    kind: ClassVar[str] = "imperfect_subgraph"
    vertices: tuple[int, ...]
    clique_number: int
    chromatic_number: int

    def verify(self, g: Graph) -> bool:
        from ..graph import induced_subgraph
        from .coloring import chromatic_number, clique_number

        h, _ = induced_subgraph(g, self.vertices)
        w, _ = clique_number(h)
        c, _ = chromatic_number(h)
        return w == self.clique_number and c == self.chromatic_number and w < c
