"""Command-line entry point.

Exit codes: 0 property holds or certificate found, 1 property fails,
2 unknown (budget exhausted), 3 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any, Sequence

from . import families
from .certify import (
    density_check,
    is_chordal,
    is_hamiltonian,
    is_perfect,
    theta_profile,
    vertex_connectivity,
)
from .certify.structure import ThetaTable
from .drawing import DrawingError, OnePlanarDrawing, validate_one_planar
from .graph import Bipartition, Graph, GraphError, two_coloring
from .io import (
    FormatError,
    drawing_from_json,
    drawing_to_json,
    planarization_to_dot,
    read_graph,
    to_edge_list,
    to_graph6,
    write_planar_code,
)

SCHEMA_VERSION = 1

EXIT_OK, EXIT_FAIL, EXIT_UNKNOWN, EXIT_INPUT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(doc: dict[str, Any]) -> None:
    doc = {"schema_version": SCHEMA_VERSION, **doc}
    sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------


def _build_family(args: argparse.Namespace) -> tuple[Graph, OnePlanarDrawing | None]:
    fam = args.family
    if fam == "k2n":
        return families.build_k2n(args.n), None
    if fam == "pdw":
        q = families.build_pseudo_double_wheel(args.r)
        return q.graph, OnePlanarDrawing.build(q.graph)
    if fam == "qs":
        rec = families.double_stellate(families.build_pseudo_double_wheel(args.r))
        return rec.graph, rec.drawing
    if fam == "hk":
        h = families.build_hk(args.k)
        return h.graph, h.drawing
    if fam == "gk":
        gk = families.build_gk(args.k)
        return gk.graph, gk.drawing
    if fam == "k2222":
        return families.build_k2222()
    raise UsageError(f"unknown family {fam}")


def cmd_gen(args: argparse.Namespace) -> int:
    g, drawing = _build_family(args)
    text = to_graph6(g) + "\n" if args.format == "graph6" else to_edge_list(g)
    _write(args.out, text)
    if args.with_drawing:
        if drawing is None:
            drawing = OnePlanarDrawing.build(g)
        _write(args.with_drawing, drawing_to_json(drawing) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# certify
# ---------------------------------------------------------------------------


def _hk_from_plain(g: Graph) -> families.HkGraph:
    if g.n % 8 or g.n // 8 < 10 or (g.n // 8) % 2:
        raise UsageError("theta needs an H_k graph in builder vertex order (n = 8k, k even >= 10)")
    k = g.n // 8
    h = families.build_hk(k)
    return families.HkGraph(k, g, h.drawing)


def cmd_certify(args: argparse.Namespace) -> int:
    g = read_graph(_read_text(args.input))
    prop = args.property
    doc: dict[str, Any] = {"property": prop, "n": g.n, "m": g.m}
    code = EXIT_OK
    if prop == "connectivity":
        kappa, witness = vertex_connectivity(g)
        doc.update(connectivity=kappa, certificate=witness.to_dict())
        if args.at_least is not None and kappa < args.at_least:
            code = EXIT_FAIL
        doc["holds"] = code == EXIT_OK
    elif prop == "bipartite":
        res = two_coloring(g)
        if isinstance(res, Bipartition):
            doc.update(holds=True, certificate={"kind": "bipartition", "X": res.X, "Y": res.Y})
        else:
            doc.update(holds=False, certificate={"kind": "odd_cycle", "cycle": list(res.cycle)})
            code = EXIT_FAIL
    elif prop == "hamiltonian":
        budget = args.budget if args.budget is not None else None
        verdict = is_hamiltonian(g, budget=budget)
        doc.update(
            verdict=verdict.status,
            reason=verdict.reason,
            expansions=verdict.expansions,
            certificate=verdict.certificate.to_dict() if verdict.certificate else None,
        )
        code = {"yes": EXIT_OK, "no": EXIT_FAIL, "unknown": EXIT_UNKNOWN}[verdict.status]
        doc["holds"] = verdict.status == "yes" if verdict.status != "unknown" else None
    elif prop == "perfect":
        verdict = is_perfect(g, args.mode)
        doc.update(
            holds=verdict.perfect,
            method=verdict.method,
            certificate=verdict.witness.to_dict() if verdict.witness else None,
        )
        code = EXIT_OK if verdict.perfect else EXIT_FAIL
    elif prop == "chordal":
        verdict = is_chordal(g)
        doc.update(holds=verdict.chordal, certificate=verdict.certificate.to_dict())
        code = EXIT_OK if verdict.chordal else EXIT_FAIL
    elif prop == "density":
        verdict = density_check(g, args.density_class)
        doc.update(holds=verdict.passed, density_class=verdict.density_class, bound=verdict.bound)
        code = EXIT_OK if verdict.passed else EXIT_FAIL
    elif prop == "theta":
        res = theta_profile(_hk_from_plain(g))
        if isinstance(res, ThetaTable):
            doc.update(holds=True, theta={f"{i},{j}": v for (i, j), v in res.values.items()})
        else:
            doc.update(holds=False, violation=res.__dict__)
            code = EXIT_FAIL
    else:
        raise UsageError(f"unknown property {prop}")
    _emit(doc)
    return code


# ---------------------------------------------------------------------------
# draw
# ---------------------------------------------------------------------------


def cmd_draw(args: argparse.Namespace) -> int:
    drawing = drawing_from_json(_read_text(args.input))
    if args.action == "validate":
        verdict = validate_one_planar(drawing)
        _emit(
            {
                "valid": verdict.valid,
                "reason": verdict.reason,
                "n": drawing.graph.n,
                "m": drawing.graph.m,
                "crossings": len(drawing.crossings),
            }
        )
        return EXIT_OK if verdict.valid else EXIT_FAIL
    if args.action == "dot":
        _write(args.out, planarization_to_dot(drawing))
        return EXIT_OK
    raise UsageError(f"unknown draw action {args.action}")


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------


def cmd_search(args: argparse.Namespace) -> int:
    from .search.sweep import SearchError, sweep_optimal_perfect

    if args.experiment != "optimal-perfect":
        raise UsageError(f"unknown experiment {args.experiment}")
    data = None
    if args.ingest:
        try:
            data = Path(args.ingest).read_bytes()
        except OSError as exc:
            raise UsageError(f"cannot read {args.ingest}: {exc}") from exc
    workers = args.workers if args.workers is not None else int(os.environ.get("ONEP_WORKERS", "1"))
    try:
        report = sweep_optimal_perfect(range(args.min_n, args.max_n + 1), workers=workers, ingest=data)
    except SearchError as exc:
        raise UsageError(str(exc)) from exc
    doc = report.to_dict()
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.report:
        Path(args.report).write_text(text)
    summary = {
        "orders": [
            {k: o[k] for k in ("n", "quadrangulations", "optimal_graphs", "perfect", "chordal")}
            for o in doc["orders"]
        ]
    }
    _emit(summary)
    return EXIT_OK


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------


def cmd_export(args: argparse.Namespace) -> int:
    if args.what == "quadrangulations":
        from .search.quadrangulations import enumerate_quadrangulations

        if args.n is None or args.out is None:
            raise UsageError("export quadrangulations needs --n and --out")
        quads = list(enumerate_quadrangulations(args.n))
        with open(args.out, "wb") as fh:
            write_planar_code([list(q.rotation) for q in quads], fh)
        _emit({"n": args.n, "count": len(quads), "format": "planar_code"})
        return EXIT_OK
    g = read_graph(_read_text(args.input))
    if args.to == "graph6":
        _write(args.out, to_graph6(g) + "\n")
    elif args.to == "edgelist":
        _write(args.out, to_edge_list(g))
    elif args.to == "dot":
        _write(args.out, planarization_to_dot(OnePlanarDrawing.build(g)))
    else:
        raise UsageError(f"unknown target format {args.to}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_INPUT)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="onep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="emit a graph family")
    gen.add_argument("family", choices=["k2n", "pdw", "qs", "hk", "gk", "k2222"])
    gen.add_argument("--n", type=int, default=3, help="size of the n-side of K_{2,n}")
    gen.add_argument("--r", type=int, default=3, help="pseudo-double wheel parameter (qs, pdw)")
    gen.add_argument("--k", type=int, default=10, help="ring parameter for hk and gk")
    gen.add_argument("--format", choices=["graph6", "edgelist"], default=None)
    gen.add_argument("--out", default=None)
    gen.add_argument("--with-drawing", metavar="FILE", default=None)
    gen.set_defaults(func=cmd_gen)

    cert = sub.add_parser("certify", help="certify a property of a graph")
    cert.add_argument(
        "--property",
        required=True,
        choices=["connectivity", "bipartite", "hamiltonian", "perfect", "chordal", "density", "theta"],
    )
    cert.add_argument("input", nargs="?", default=None, help="graph6 or edge-list file (default stdin)")
    cert.add_argument("--budget", type=int, default=None, help="node expansions for the Hamiltonicity search")
    cert.add_argument("--mode", choices=["spgt", "oracle"], default="spgt")
    cert.add_argument(
        "--class",
        dest="density_class",
        choices=["one_planar", "bipartite_one_planar", "optimal"],
        default="one_planar",
    )
    cert.add_argument("--at-least", type=int, default=None, help="connectivity threshold for the exit code")
    cert.set_defaults(func=cmd_certify)

    draw = sub.add_parser("draw", help="validate or render a drawing JSON file")
    draw.add_argument("action", choices=["validate", "dot"])
    draw.add_argument("input", nargs="?", default=None)
    draw.add_argument("--out", default=None)
    draw.set_defaults(func=cmd_draw)

    search = sub.add_parser("search", help="run the optimal 1-planar perfect graph sweep")
    search.add_argument("experiment", choices=["optimal-perfect"])
    search.add_argument("--min-n", type=int, default=8)
    search.add_argument("--max-n", type=int, default=14)
    search.add_argument("--ingest", default=None, help="planar_code file of quadrangulations")
    search.add_argument("--workers", type=int, default=None)
    search.add_argument("--report", default=None)
    search.set_defaults(func=cmd_search)

    export = sub.add_parser("export", help="convert formats or write quadrangulation lists")
    export.add_argument("what", choices=["graph", "quadrangulations"])
    export.add_argument("input", nargs="?", default=None)
    export.add_argument("--to", choices=["graph6", "edgelist", "dot"], default="graph6")
    export.add_argument("--n", type=int, default=None)
    export.add_argument("--out", default=None)
    export.set_defaults(func=cmd_export)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gen" and args.format is None:
        out = args.out or ""
        args.format = "edgelist" if out.endswith((".txt", ".el", ".edges")) else "graph6"
    if args.command == "certify" and args.budget is None and "ONEP_BUDGET" in os.environ:
        args.budget = int(os.environ["ONEP_BUDGET"])
    try:
        return args.func(args)
    except (UsageError, FormatError, GraphError, DrawingError, families.FamilyError, ValueError) as exc:
        sys.stderr.write(f"onep: error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
