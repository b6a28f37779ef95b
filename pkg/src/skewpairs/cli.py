"""Command-line front end.

Thin adapters only: every verb maps onto one library operation and streams
its canonical serialization.  Exit status 0 on success, 1 when verification
reports findings, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import catalog as catalog_mod
from .centralizer import NormalFormError, analyze, report_to_jsonable
from .liealg import (
    NotAdmissibleError,
    build_pair,
    realization_from_jsonable,
    realization_to_jsonable,
    verify_relations,
)
from .skewgraph import (
    DEFAULT_MAX_NODES,
    enumerate_connected,
    graph_from_text,
    graph_to_text,
    render_ascii,
)

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_output(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewpairs",
        description="Exact nilpotent-pair classification in the classical Lie algebras",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("enumerate", help="list connected skew-graphs with n nodes")
    p.add_argument("n", type=int)
    p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)

    p = sub.add_parser("build", help="realize an admissible graph as matrices")
    p.add_argument("--series", required=True, choices=["A", "B", "C", "D"])
    p.add_argument("--input", required=True, help="graph text file ('-' for stdin)")
    p.add_argument("--orbit-sign", choices=["plus", "minus"])
    p.add_argument("--format", choices=["dense", "sparse"], default="dense")
    p.add_argument("--output")

    p = sub.add_parser("verify", help="check relations and analyze a realization JSON")
    p.add_argument("--input", required=True)
    p.add_argument("--output")

    p = sub.add_parser("classify", help="emit the verified catalog for (series, dimV, kind)")
    p.add_argument("--series", required=True, choices=["A", "B", "C", "D"])
    p.add_argument("--dimv", required=True, type=int)
    p.add_argument("--kind", required=True, choices=["distinguished", "principal"])
    p.add_argument("--format", choices=["json", "csv", "table"], default="json")
    p.add_argument("--full-matrices", action="store_true")
    p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    p.add_argument("--output")

    p = sub.add_parser("count", help="count orbits")
    p.add_argument("--series", required=True, choices=["A", "B", "C", "D"])
    p.add_argument("--dimv", required=True, type=int)
    p.add_argument("--kind", required=True, choices=["distinguished", "principal"])
    p.add_argument("--mode", choices=["fast", "full"], default="fast")
    p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)

    p = sub.add_parser("export", help="re-serialize a catalog JSON as csv or table")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=["csv", "table"], required=True)
    p.add_argument("--output")

    p = sub.add_parser("render", help="draw skew-diagrams as ASCII art")
    p.add_argument("--input", required=True, help="graph text file ('-' for stdin)")
    p.add_argument("--output")
    return parser


def _cmd_enumerate(args) -> int:
    graphs = enumerate_connected(args.n, max_nodes=args.max_nodes)
    for g in graphs:
        sys.stdout.write(graph_to_text(g) + "\n")
    return EXIT_OK


def _cmd_build(args) -> int:
    graph = graph_from_text(_read_input(args.input))
    r = build_pair(args.series, graph, args.orbit_sign)
    _write_output(json.dumps(realization_to_jsonable(r, args.format), indent=2), args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    r = realization_from_jsonable(json.loads(_read_input(args.input)))
    relations = verify_relations(r)
    doc = {"relations": {name: ok for name, ok in relations.checks}}
    status = EXIT_OK
    if relations.ok:
        doc["report"] = report_to_jsonable(analyze(r))
    else:
        doc["report"] = None
        status = EXIT_FINDINGS
    _write_output(json.dumps(doc, indent=2), args.output)
    return status


def _cmd_classify(args) -> int:
    entries = catalog_mod.classify(args.series, args.dimv, args.kind, max_nodes=args.max_nodes)
    fmt = "text-table" if args.format == "table" else args.format
    text = catalog_mod.export_entries(entries, fmt, include_matrices=args.full_matrices)
    _write_output(text, args.output)
    return EXIT_OK


def _cmd_count(args) -> int:
    n = catalog_mod.count_orbits(
        args.series, args.dimv, args.kind, mode=args.mode, max_nodes=args.max_nodes
    )
    sys.stdout.write(f"{n}\n")
    return EXIT_OK


def _cmd_export(args) -> int:
    doc = json.loads(_read_input(args.input))
    _write_output(catalog_mod.export_catalog_document(doc, args.format), args.output)
    return EXIT_OK


def _cmd_render(args) -> int:
    graph = graph_from_text(_read_input(args.input))
    _write_output(render_ascii(graph), args.output)
    return EXIT_OK


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "build": _cmd_build,
    "verify": _cmd_verify,
    "classify": _cmd_classify,
    "count": _cmd_count,
    "export": _cmd_export,
    "render": _cmd_render,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.verb](args)
    except (NotAdmissibleError, NormalFormError) as exc:
        # The input parsed fine but failed a mathematical validity judgment.
        sys.stderr.write(f"finding: {exc}\n")
        return EXIT_FINDINGS
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
