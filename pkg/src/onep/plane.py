"""Plane quadrangulations stored as rotation systems."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .graph import Graph, is_bipartite, is_connected, make_graph


class QuadrangulationError(ValueError):
    pass


def trace_faces(rotation: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Faces of a rotation system.

    Directed edge ``u -> v`` is followed by ``v -> w`` where ``w`` comes right
    after ``u`` in the cyclic order around ``v``. Each directed edge lies on
    exactly one face.
    """
    pos = [{w: i for i, w in enumerate(nbrs)} for nbrs in rotation]
    used: set[tuple[int, int]] = set()
    faces = []
    for u, nbrs in enumerate(rotation):
        for v in nbrs:
            if (u, v) in used:
                continue
            face = []
            a, b = u, v
            while (a, b) not in used:
                used.add((a, b))
                face.append(a)
                rb = rotation[b]
                c = rb[(pos[b][a] + 1) % len(rb)]
                a, b = b, c
            faces.append(tuple(face))
    return faces


def rotation_from_faces(n: int, faces: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Inverse of :func:`trace_faces` for consistently oriented faces."""
    succ: list[dict[int, int]] = [dict() for _ in range(n)]
    for face in faces:
        k = len(face)
        for i in range(k):
            a, b, c = face[i - 1], face[i], face[(i + 1) % k]
            if a in succ[b]:
                raise QuadrangulationError(f"corner ({a}, {b}) used twice")
            succ[b][a] = c
    rotation = []
    for v in range(n):
        if not succ[v]:
            rotation.append(())
            continue
        start = min(succ[v])
        order = [start]
        w = succ[v][start]
        while w != start:
            order.append(w)
            if len(order) > len(succ[v]):
                raise QuadrangulationError(f"rotation at {v} is not a single cycle")
            w = succ[v][w]
        if len(order) != len(succ[v]):
            raise QuadrangulationError(f"rotation at {v} is not a single cycle")
        rotation.append(tuple(order))
    return rotation


@dataclass(frozen=True)
class PlaneQuadrangulation:
    """``rotation[v]`` lists the neighbours of ``v`` in cyclic order."""

    rotation: tuple[tuple[int, ...], ...]

    @classmethod
    def from_faces(cls, n: int, faces: Sequence[Sequence[int]]) -> "PlaneQuadrangulation":
        return cls(tuple(rotation_from_faces(n, faces)))

    @classmethod
    def from_rotation(cls, rotation: Sequence[Sequence[int]]) -> "PlaneQuadrangulation":
        return cls(tuple(tuple(r) for r in rotation))

    @property
    def n(self) -> int:
        return len(self.rotation)

    @cached_property
    def graph(self) -> Graph:
        return make_graph(self.n, [(u, v) for u, r in enumerate(self.rotation) for v in r])

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        return tuple(trace_faces(self.rotation))

    def check(self) -> None:
        """Raise unless this is a simple, connected, bipartite plane quadrangulation."""
        n = self.n
        for v, r in enumerate(self.rotation):
            if len(set(r)) != len(r) or v in r:
                raise QuadrangulationError(f"rotation at {v} has a loop or repeated neighbour")
            for w in r:
                if not 0 <= w < n or v not in self.rotation[w]:
                    raise QuadrangulationError(f"rotation is not symmetric at edge ({v}, {w})")
        g = self.graph
        if not is_connected(g):
            raise QuadrangulationError("not connected")
        if not is_bipartite(g):
            raise QuadrangulationError("not bipartite")
        faces = self.faces
        if any(len(f) != 4 for f in faces):
            raise QuadrangulationError("a face is not a quadrangle")
        if n - g.m + len(faces) != 2:
            raise QuadrangulationError("Euler characteristic is not 2: embedding is not planar")
        for f in faces:
            if len(set(f)) != 4:
                raise QuadrangulationError(f"face {f} is not bounded by a 4-cycle")

    def is_valid(self) -> bool:
        try:
            self.check()
        except QuadrangulationError:
            return False
        return True


def pseudo_double_wheel(r: int) -> PlaneQuadrangulation:
    """Hub 0, antihub 1, rim u_1 w_1 ... u_r w_r on vertices 2..2r+1.

    The hub sees every u_i, the antihub every w_i; r = 3 gives the cube.
    """
    if r < 3:
        raise QuadrangulationError("pseudo-double wheels need r >= 3")
    hub, antihub = 0, 1

    def u(i: int) -> int:
        return 2 + 2 * ((i - 1) % r)

    def w(i: int) -> int:
        return 3 + 2 * ((i - 1) % r)

    faces = []
    for i in range(1, r + 1):
        faces.append((hub, u(i), w(i), u(i + 1)))
        faces.append((antihub, w(i + 1), u(i + 1), w(i)))
    q = PlaneQuadrangulation.from_faces(2 * r + 2, faces)
    q.check()
    return q
