"""Enumeration of 3-connected plane quadrangulations.

Generation starts from the pseudo-double wheels and applies two expansions:

* face expansion: split a vertex ``v`` into two vertices that share two
  neighbours of ``v`` and span a new quadrangular face; only splits leaving
  both halves with degree >= 3 are used;
* face insertion: place a new 4-cycle inside a face and join it to the
  corners (the cube pattern).

Isomorph rejection uses a canonical code of the embedded map, taken over all
starting darts in both orientations, so mirror images are identified.
"""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator

from ..certify.connectivity import vertex_connectivity
from ..io import FormatError, read_planar_code
from ..plane import (
    PlaneQuadrangulation,
    QuadrangulationError,
    pseudo_double_wheel,
    trace_faces,
)

Rotation = tuple[tuple[int, ...], ...]

MIN_ORDER = 8


# ---------------------------------------------------------------------------
# Canonical code of an embedded map
# ---------------------------------------------------------------------------


def _code_from(rotation: Rotation, pos: list[dict[int, int]], u: int, v: int, mirror: bool) -> list[int]:
    """BFS code rooted at dart u->v: each vertex lists its neighbours' numbers, then 0."""
    n = len(rotation)
    number = [0] * n
    number[u] = 1
    first = [0] * n
    first[u] = v
    order = [u]
    nxt = 2
    code: list[int] = []
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        rx = rotation[x]
        d = len(rx)
        start = pos[x][first[x]]
        for t in range(d):
            y = rx[(start - t) % d] if mirror else rx[(start + t) % d]
            if number[y] == 0:
                number[y] = nxt
                nxt += 1
                first[y] = x
                order.append(y)
            code.append(number[y])
        code.append(0)
    return code


def map_code(rotation: Rotation) -> tuple[int, ...]:
    """Lexicographically smallest BFS code over all darts and both orientations."""
    pos = [{w: i for i, w in enumerate(r)} for r in rotation]
    best: list[int] | None = None
    max_deg = max(len(r) for r in rotation)
    for u, r in enumerate(rotation):
        # the code starts with deg(u) entries then 0: prefer maximum-degree roots
        if len(r) != max_deg:
            continue
        for v in r:
            for mirror in (False, True):
                cand = _code_from(rotation, pos, u, v, mirror)
                if best is None or cand < best:
                    best = cand
    assert best is not None
    return tuple(best)


# ---------------------------------------------------------------------------
# Expansions
# ---------------------------------------------------------------------------


def _replace(r: tuple[int, ...], old: int, new: tuple[int, ...]) -> tuple[int, ...]:
    i = r.index(old)
    return r[:i] + new + r[i + 1 :]


def face_expansions(rotation: Rotation) -> Iterator[Rotation]:
    """All face expansions whose two new vertices keep degree >= 3."""
    n = len(rotation)
    for v in range(n):
        rv = rotation[v]
        d = len(rv)
        for i in range(d):
            for span in range(2, d - 1):
                j = (i + span) % d
                a_side = tuple(rv[(i + t) % d] for t in range(span + 1))
                c_side = tuple(rv[(j + t) % d] for t in range(d - span + 1))
                ci, cj = rv[i], rv[j]
                c = n
                rot = list(rotation)
                rot[v] = a_side
                rot.append(c_side)
                for x in c_side[1:-1]:
                    rot[x] = _replace(rot[x], v, (c,))
                rot[ci] = _replace(rot[ci], v, (v, c))
                rot[cj] = _replace(rot[cj], v, (c, v))
                yield tuple(rot)


def face_insertions(rotation: Rotation) -> Iterator[Rotation]:
    """Insert a 4-cycle x1..x4 inside each face, x_i joined to corner w_i."""
    n = len(rotation)
    for face in trace_faces(rotation):
        w = face
        x = [n, n + 1, n + 2, n + 3]
        rot = list(rotation) + [()] * 4
        for t in range(4):
            prev_w, cur = w[t - 1], w[t]
            # at corner (prev_w, cur, nxt_w) the new edge to x_t sits between prev_w and nxt_w
            r = rot[cur]
            k = r.index(prev_w)
            rot[cur] = r[: k + 1] + (x[t],) + r[k + 1 :]
        for t in range(4):
            rot[x[t]] = (w[t], x[(t - 1) % 4], x[(t + 1) % 4])
        yield tuple(rot)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _accept(rotation: Rotation) -> PlaneQuadrangulation | None:
    q = PlaneQuadrangulation.from_rotation(rotation)
    if min(len(r) for r in rotation) < 3:
        return None
    if not q.is_valid():
        return None
    return q


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Rotation, ...]:
    """Canonical representatives of the quadrangulations of order n with minimum degree 3.

    This class contains the 3-connected ones (and a few with 2-cuts, filtered
    out later); it is closed under both expansions.
    """
    if n < MIN_ORDER:
        return ()
    found: dict[tuple[int, ...], Rotation] = {}

    def offer(rotation: Rotation) -> None:
        if _accept(rotation) is None:
            return
        code = map_code(rotation)
        if code not in found:
            found[code] = rotation

    if n % 2 == 0:
        offer(pseudo_double_wheel((n - 2) // 2).rotation)
    for parent in _level(n - 1):
        for child in face_expansions(parent):
            offer(child)
    for parent in _level(n - 4):
        for child in face_insertions(parent):
            offer(child)
    return tuple(_relabel_canonical(found[c]) for c in sorted(found))


def _relabel_canonical(rotation: Rotation) -> Rotation:
    """The map rebuilt from its canonical code (vertex i = i-th vertex in BFS order)."""
    return _rebuild(map_code(rotation))


def _rebuild(code: tuple[int, ...]) -> Rotation:
    rows: list[list[int]] = [[]]
    for x in code:
        if x == 0:
            rows.append([])
        else:
            rows[-1].append(x - 1)
    rows.pop()
    return tuple(tuple(r) for r in rows)


def enumerate_quadrangulations(n: int) -> Iterator[PlaneQuadrangulation]:
    """Stream the 3-connected quadrangulations of order n, one per isomorphism class."""
    if n < MIN_ORDER:
        raise ValueError(f"3-connected quadrangulations start at order {MIN_ORDER}")
    for rotation in _level(n):
        q = PlaneQuadrangulation.from_rotation(rotation)
        q.check()
        kappa, _ = vertex_connectivity(q.graph)
        if kappa >= 3:
            yield q


def ingest_planar_code(data: bytes, n: int | None = None) -> list[PlaneQuadrangulation]:
    """Read quadrangulations from planar_code, optionally keeping only order ``n``.

    Entries are validated as simple plane quadrangulations; isomorphic
    duplicates are collapsed.
    """
    found: dict[tuple[int, ...], PlaneQuadrangulation] = {}
    for rotation in read_planar_code(data):
        rot = tuple(tuple(r) for r in rotation)
        q = PlaneQuadrangulation.from_rotation(rot)
        try:
            q.check()
        except QuadrangulationError as exc:
            raise FormatError(f"planar_code entry is not a quadrangulation: {exc}") from exc
        if n is not None and q.n != n:
            continue
        code = map_code(rot)
        if code not in found:
            found[code] = PlaneQuadrangulation.from_rotation(_relabel_canonical(rot))
    return [found[c] for c in sorted(found)]


def ingest_planar_code_file(path: str | Path, n: int | None = None) -> list[PlaneQuadrangulation]:
    return ingest_planar_code(Path(path).read_bytes(), n)


def canonical_codes(quads: Iterable[PlaneQuadrangulation]) -> set[tuple[int, ...]]:
    return {map_code(q.rotation) for q in quads}
