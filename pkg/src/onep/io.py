"""Readers and writers: graph6, edge lists, drawing JSON, DOT and planar_code."""

from __future__ import annotations

import json
from pathlib import Path
from typing import BinaryIO, Iterator

import networkx as nx

from .drawing import OnePlanarDrawing, planarize
from .graph import Graph, GraphError, make_graph


class FormatError(ValueError):
    pass


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    """Header-less graph6 line without trailing newline."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, nodes=list(range(g.n)), header=False).decode("ascii").rstrip("\n")


def from_graph6(line: str | bytes) -> Graph:
    if isinstance(line, bytes):
        line = line.decode("ascii")
    line = line.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<") :]
    try:
        h = nx.from_graph6_bytes(line.encode("ascii"))
    except (nx.NetworkXError, ValueError, IndexError) as exc:
        raise FormatError(f"bad graph6 string {line[:20]!r}: {exc}") from exc
    return make_graph(h.number_of_nodes(), h.edges())


# ---------------------------------------------------------------------------
# Edge list: "n m" then m lines "u v"
# ---------------------------------------------------------------------------


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise FormatError("empty edge list")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise FormatError(f"malformed edge list: {exc}") from exc
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    try:
        return make_graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def read_graph(text: str) -> Graph:
    """Sniff graph6 vs edge list from the first non-empty line."""
    stripped = text.strip()
    if not stripped:
        raise FormatError("no graph in input")
    first = stripped.splitlines()[0].strip()
    if first.startswith(">>graph6<<") or len(first.split()) == 1:
        return from_graph6(first)
    return from_edge_list(stripped)


# ---------------------------------------------------------------------------
# Drawing JSON
# ---------------------------------------------------------------------------


def drawing_to_json(d: OnePlanarDrawing) -> str:
    edges = d.graph.edges()
    index = {e: i for i, e in enumerate(edges)}
    crossings = sorted(sorted((index[e], index[f])) for e, f in d.crossings)
    doc = {"n": d.graph.n, "edges": [list(e) for e in edges], "crossings": crossings}
    return json.dumps(doc, separators=(",", ":"))


def drawing_from_json(text: str) -> OnePlanarDrawing:
    try:
        doc = json.loads(text)
        n = int(doc["n"])
        edges = [tuple(int(x) for x in e) for e in doc["edges"]]
        pairs = [(int(i), int(j)) for i, j in doc.get("crossings", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed drawing JSON: {exc}") from exc
    try:
        g = make_graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc
    if g.m != len(edges):
        raise FormatError("drawing JSON lists a repeated edge")
    for i, j in pairs:
        if not (0 <= i < len(edges) and 0 <= j < len(edges)):
            raise FormatError(f"crossing refers to missing edge index in ({i}, {j})")
    return OnePlanarDrawing.build(g, [(edges[i], edges[j]) for i, j in pairs])


def planarization_to_dot(d: OnePlanarDrawing, name: str = "planarization") -> str:
    p = planarize(d)
    n = d.graph.n
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(n):
        lines.append(f"  {v};")
    for i in range(len(d.crossings)):
        lines.append(f'  {n + i} [shape=point, color=red, label="x{i}"];')
    for u, v in p.edges():
        style = " [color=red, style=dashed]" if v >= n else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# planar_code
# ---------------------------------------------------------------------------

PLANAR_CODE_HEADER = b">>planar_code<<"


def write_planar_code(rotations: list[list[tuple[int, ...]]], stream: BinaryIO, header: bool = True) -> None:
    """Write embedded graphs given as 0-based rotation systems.

    Each entry of ``rotations`` lists, per vertex, its neighbours in cyclic
    order. Uses the 1-byte variant for n < 256, else the 2-byte little-endian one.
    """
    if header:
        stream.write(PLANAR_CODE_HEADER)
    for rot in rotations:
        n = len(rot)
        if n < 256:
            out = bytearray([n])
            for nbrs in rot:
                out.extend(w + 1 for w in nbrs)
                out.append(0)
        else:
            out = bytearray([0])
            out += n.to_bytes(2, "little")
            for nbrs in rot:
                for w in nbrs:
                    out += (w + 1).to_bytes(2, "little")
                out += b"\x00\x00"
        stream.write(bytes(out))


def read_planar_code(data: bytes) -> Iterator[list[tuple[int, ...]]]:
    """Yield 0-based rotation systems from a planar_code byte string."""
    pos = 0
    if data.startswith(PLANAR_CODE_HEADER):
        pos = len(PLANAR_CODE_HEADER)
    elif data.startswith(b">>planar_code"):
        end = data.find(b"<<")
        if end < 0:
            raise FormatError("unterminated planar_code header")
        pos = end + 2
    size = len(data)
    while pos < size:
        n = data[pos]
        pos += 1
        wide = n == 0
        if wide:
            if pos + 2 > size:
                raise FormatError("truncated planar_code entry")
            n = int.from_bytes(data[pos : pos + 2], "little")
            pos += 2
        rot: list[tuple[int, ...]] = []
        for _ in range(n):
            nbrs = []
            while True:
                if pos + (2 if wide else 1) > size:
                    raise FormatError("truncated planar_code entry")
                if wide:
                    w = int.from_bytes(data[pos : pos + 2], "little")
                    pos += 2
                else:
                    w = data[pos]
                    pos += 1
                if w == 0:
                    break
                if w > n:
                    raise FormatError(f"neighbour {w} exceeds vertex count {n}")
                nbrs.append(w - 1)
            rot.append(tuple(nbrs))
        yield rot


def read_planar_code_file(path: str | Path) -> list[list[tuple[int, ...]]]:
    return list(read_planar_code(Path(path).read_bytes()))
