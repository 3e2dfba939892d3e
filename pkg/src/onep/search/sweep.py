"""Sweep optimal 1-planar graphs (quadrangulation skeleton + crossing diagonals)
for perfect and chordal members."""

from __future__ import annotations

import datetime as _dt
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable

from ..canon import canonical_form
from ..certify.chordal import is_chordal
from ..certify.connectivity import vertex_connectivity
from ..certify.perfect import is_perfect
from ..certify.structure import density_check
from ..drawing import OnePlanarDrawing, validate_one_planar
from ..families import add_crossing_diagonals
from ..graph import Graph
from ..io import to_graph6
from ..plane import PlaneQuadrangulation
from .quadrangulations import enumerate_quadrangulations, ingest_planar_code

SCHEMA_VERSION = 1
DEFAULT_MAX_N = 14
HARD_MAX_N = 24

COMPLETENESS_NOTE = (
    "Counts cover optimal 1-planar graphs obtained from the enumerated 3-connected "
    "quadrangulation skeletons; uniqueness and absence claims hold modulo the "
    "completeness of that enumeration."
)


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class OptimalGraph:
    skeleton: PlaneQuadrangulation
    graph: Graph
    drawing: OnePlanarDrawing
    connectivity: int


@dataclass(frozen=True)
class Rejected:
    reason: str


def optimal_from_quadrangulation(q: PlaneQuadrangulation) -> OptimalGraph | Rejected:
    """Add both diagonals of every face as a crossing pair and check the result."""
    q.check()
    g, drawing, clashes = add_crossing_diagonals(q)
    if clashes:
        return Rejected(f"diagonal {clashes[0]} duplicates an existing edge")
    if not density_check(g, "optimal"):
        return Rejected(f"edge count {g.m} differs from 4n - 8 = {4 * g.n - 8}")
    verdict = validate_one_planar(drawing)
    if not verdict:
        return Rejected(f"drawing invalid: {verdict.reason}")
    kappa, _ = vertex_connectivity(g)
    if kappa < 4:
        return Rejected(f"connectivity {kappa} < 4")
    return OptimalGraph(q, g, drawing, kappa)


@dataclass
class OrderReport:
    n: int
    quadrangulations: int = 0
    rejected: int = 0
    optimal_graphs: int = 0
    perfect: int = 0
    chordal: int = 0
    min_connectivity: int | None = None
    perfect_witnesses: list[str] = field(default_factory=list)
    chordal_witnesses: list[str] = field(default_factory=list)
    imperfection_witnesses: dict[str, str] = field(default_factory=dict)
    wall_time: float = 0.0

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "quadrangulations": self.quadrangulations,
            "rejected": self.rejected,
            "optimal_graphs": self.optimal_graphs,
            "perfect": self.perfect,
            "chordal": self.chordal,
            "min_connectivity": self.min_connectivity,
            "perfect_witnesses": self.perfect_witnesses,
            "chordal_witnesses": self.chordal_witnesses,
            "imperfection_witnesses": self.imperfection_witnesses,
            "wall_time": round(self.wall_time, 3),
        }


@dataclass
class SearchReport:
    orders: list[OrderReport]
    source: str
    completeness_note: str = COMPLETENESS_NOTE
    timestamp: str = ""

    def to_dict(self, with_timing: bool = True) -> dict[str, Any]:
        orders = [o.to_dict() for o in self.orders]
        if not with_timing:
            for o in orders:
                o.pop("wall_time")
        out: dict[str, Any] = {
            "schema_version": SCHEMA_VERSION,
            "source": self.source,
            "completeness_note": self.completeness_note,
            "orders": orders,
        }
        if with_timing:
            out["timestamp"] = self.timestamp
        return out


def _examine(rotation: tuple[tuple[int, ...], ...]) -> dict[str, Any]:
    """Per-skeleton pipeline; runs in worker processes."""
    q = PlaneQuadrangulation.from_rotation(rotation)
    result = optimal_from_quadrangulation(q)
    if isinstance(result, Rejected):
        return {"rejected": result.reason}
    g = result.graph
    perfect = is_perfect(g, "spgt")
    chordal = is_chordal(g)
    witness = perfect.witness.to_dict() if perfect.witness is not None and not perfect.perfect else None
    return {
        "encoding": canonical_form(g).encoding.hex(),
        "graph6": to_graph6(g),
        "connectivity": result.connectivity,
        "perfect": perfect.perfect,
        "chordal": chordal.chordal,
        "imperfection": witness,
    }


def _check_range(orders: Iterable[int]) -> list[int]:
    orders = sorted(set(orders))
    if not orders:
        raise SearchError("empty order range")
    if orders[0] < 8:
        raise SearchError("optimal 1-planar graphs from quadrangulations start at n = 8")
    if orders[-1] > HARD_MAX_N:
        raise SearchError(f"n = {orders[-1]} exceeds the supported maximum {HARD_MAX_N}")
    return orders


def sweep_optimal_perfect(
    n_range: Iterable[int],
    workers: int | None = None,
    ingest: bytes | None = None,
) -> SearchReport:
    """Enumerate skeletons, derive optimal graphs, certify them, merge by isomorphism class."""
    orders = _check_range(n_range)
    if workers is None:
        workers = int(os.environ.get("ONEP_WORKERS", "1"))
    reports = []
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for n in orders:
            t0 = time.perf_counter()
            if ingest is not None:
                quads = ingest_planar_code(ingest, n)
            else:
                quads = list(enumerate_quadrangulations(n))
            rotations = [q.rotation for q in quads]
            if pool is not None:
                results = list(pool.map(_examine, rotations, chunksize=4))
            else:
                results = [_examine(r) for r in rotations]
            rep = OrderReport(n, quadrangulations=len(quads))
            classes: dict[str, dict[str, Any]] = {}
            for res in results:
                if "rejected" in res:
                    rep.rejected += 1
                    continue
                classes.setdefault(res["encoding"], res)
            for key in sorted(classes):
                res = classes[key]
                rep.optimal_graphs += 1
                k = res["connectivity"]
                rep.min_connectivity = k if rep.min_connectivity is None else min(rep.min_connectivity, k)
                if res["perfect"]:
                    rep.perfect += 1
                    rep.perfect_witnesses.append(res["graph6"])
                elif res["imperfection"] is not None:
                    rep.imperfection_witnesses[res["graph6"]] = "{kind}:{cycle}".format(
                        kind=res["imperfection"]["kind"],
                        cycle="-".join(map(str, res["imperfection"].get("cycle", []))),
                    )
                if res["chordal"]:
                    rep.chordal += 1
                    rep.chordal_witnesses.append(res["graph6"])
            rep.wall_time = time.perf_counter() - t0
            reports.append(rep)
    finally:
        if pool is not None:
            pool.shutdown()
    stamp = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    return SearchReport(reports, "ingest" if ingest is not None else "builtin", timestamp=stamp)
