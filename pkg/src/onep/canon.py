"""Canonical labelling by partition refinement and individualisation.

The search tree is the usual one: refine to an equitable ordered partition,
individualise each vertex of the first non-singleton cell, recurse. Leaves are
compared by their relabelled adjacency rows; the smallest wins. Automorphisms
found when two leaves coincide prune sibling subtrees lying in the same orbit
of the pointwise stabiliser of the current path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class CanonicalForm:
    """``labeling[v]`` is the canonical position of vertex ``v``."""

    labeling: tuple[int, ...]
    encoding: bytes

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.encoding == other.encoding

    def __hash__(self) -> int:
        return hash(self.encoding)


def _refine(masks: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells until every vertex of a cell sees the same count in every cell."""
    while True:
        cell_masks = []
        for cell in cells:
            cm = 0
            for v in cell:
                cm |= 1 << v
            cell_masks.append(cm)
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                mv = masks[v]
                sig = tuple((mv & cm).bit_count() for cm in cell_masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
                continue
            changed = True
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        cells = new_cells
        if not changed:
            return cells


def _leaf_code(masks: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        mv = masks[v]
        while mv:
            low = mv & -mv
            row |= 1 << pos[low.bit_length() - 1]
            mv ^= low
        rows.append(row)
    return tuple(rows)


def _orbits(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    root = list(range(n))

    def find(x: int) -> int:
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                root[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical_form(g: Graph) -> CanonicalForm:
    n = g.n
    masks = g.masks
    if n == 0:
        return CanonicalForm((), (0).to_bytes(4, "big"))

    best_code: tuple[int, ...] | None = None
    best_order: list[int] | None = None
    first_order: list[int] | None = None
    first_code: tuple[int, ...] | None = None
    automorphisms: list[tuple[int, ...]] = []

    def record_automorphism(order_a: list[int], order_b: list[int]) -> None:
        # maps the vertex at position i of leaf a to the vertex at position i of leaf b
        gamma = [0] * n
        for a, b in zip(order_a, order_b):
            gamma[a] = b
        automorphisms.append(tuple(gamma))

    def search(cells: list[list[int]], path: list[int]) -> None:
        nonlocal best_code, best_order, first_order, first_code
        target = next((c for c in cells if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _leaf_code(masks, order)
            if first_code is None:
                first_code, first_order = code, order
            elif code == first_code:
                record_automorphism(first_order, order)
            if best_code is None or code < best_code:
                best_code, best_order = code, order
            elif code == best_code and order != best_order:
                record_automorphism(best_order, order)
            return
        idx = cells.index(target)
        explored: list[int] = []
        for v in sorted(target):
            if explored:
                fixing = [a for a in automorphisms if all(a[p] == p for p in path)]
                if fixing:
                    orb = _orbits(n, fixing)
                    if any(orb[v] == orb[u] for u in explored):
                        continue
            explored.append(v)
            rest = [u for u in target if u != v]
            child = cells[:idx] + [[v], rest] + cells[idx + 1 :]
            search(_refine(masks, child), path + [v])

    start = _refine(masks, [list(range(n))])
    search(start, [])
    assert best_order is not None and best_code is not None
    labeling = [0] * n
    for i, v in enumerate(best_order):
        labeling[v] = i
    width = (n + 7) // 8
    encoding = n.to_bytes(4, "big") + b"".join(row.to_bytes(width, "big") for row in best_code)
    return CanonicalForm(tuple(labeling), encoding)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
