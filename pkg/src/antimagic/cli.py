"""Command-line front end.

Exit codes: 0 success, 1 verifier rejects (``verify``) or no labeling
exists (``oracle``), 2 ParseError, 3 ShapeInvalid, 4 VerifyFailed,
5 any other library error (search budget, unsolved gap shape).
Errors are reported on stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import families as fam
from .document import GraphDocument, parse, to_dot
from .errors import (
    AntimagicError,
    BudgetExceeded,
    LabelSetInvalid,
    ParseError,
    ShapeInvalid,
    ShapeMismatch,
    VerificationFailed,
)
from .graph import first_violation
from .oracle import ANTI, STRONG, SearchConfig, SearchStats, count_labelings, find_labeling
from .sweep import ENUMERATORS, SCHEMES, label_graph, label_shape, sweep

EXIT_OK, EXIT_REJECT, EXIT_PARSE, EXIT_SHAPE, EXIT_VERIFY, EXIT_OTHER = 0, 1, 2, 3, 4, 5


def _read(source: str, stdin) -> GraphDocument:
    if source == "-":
        text = stdin.read()
    else:
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc.strerror}") from None
    return parse(text)


def _shape_of_meta(meta):
    if "family" not in meta:
        return None
    return fam.shape_from_args(meta["family"], [str(p) for p in meta.get("params", [])])


def cmd_gen(args, out, stdin):
    shape = fam.shape_from_args(args.family, args.params)
    family, params = fam.shape_to_args(shape)
    out.write(GraphDocument.of(shape.graph(), meta={"family": family, "params": params}).emit() + "\n")
    return EXIT_OK


def cmd_label(args, out, stdin):
    if args.target == "-" or args.target.endswith(".json"):
        doc = _read(args.target, stdin)
        g = doc.graph()
        lg, shape = label_graph(g, _shape_of_meta(doc.meta), args.scheme)
    else:
        shape = fam.shape_from_args(args.target, args.params)
        lg = label_shape(shape, args.scheme)
    if not lg.is_strongly_antimagic():
        raise VerificationFailed("labeling failed verification")
    family, params = fam.shape_to_args(shape)
    meta = {"family": family, "params": params, "scheme": args.scheme}
    if "class" in lg.meta:
        meta["class"] = lg.meta["class"]
    out.write(GraphDocument.of_labeled(lg, meta).emit() + "\n")
    return EXIT_OK


def cmd_verify(args, out, stdin):
    doc = _read(args.document, stdin)
    g = doc.graph()
    if doc.labels is None:
        raise ParseError("document has no labels")
    report = {"strong": args.strong}
    try:
        lg = doc.labeled()
    except ParseError as exc:
        report.update(valid=False, reason=str(exc))
        out.write(json.dumps(report, sort_keys=True) + "\n")
        return EXIT_REJECT
    bad = first_violation(g, lg.labels, strong=args.strong)
    report.update(valid=bad is None, phi=list(lg.phi), degrees=list(g.degrees))
    if bad is not None:
        a, b = bad
        report["violation"] = {"pair": [a, b], "phi": [lg.phi[a], lg.phi[b]], "degrees": [g.degree(a), g.degree(b)]}
    out.write(json.dumps(report, sort_keys=True) + "\n")
    return EXIT_OK if bad is None else EXIT_REJECT


def cmd_oracle(args, out, stdin):
    doc = _read(args.document, stdin)
    g = doc.graph()
    cfg = SearchConfig(
        mode=args.mode, node_budget=args.budget, time_limit=args.time_limit, workers=args.workers,
        max_edges=10 if args.count else 14,
    )
    stats = SearchStats()
    try:
        if args.count:
            n = count_labelings(g, cfg, stats)
            out.write(json.dumps({"status": "counted", "count": n, "nodes": stats.nodes, "mode": args.mode}) + "\n")
            return EXIT_OK
        labels = find_labeling(g, cfg, stats=stats)
    except BudgetExceeded as exc:
        out.write(json.dumps({"status": "budget-exceeded", "message": str(exc), "mode": args.mode}) + "\n")
        return EXIT_OTHER
    if labels is None:
        out.write(json.dumps({"status": "absent", "nodes": stats.nodes, "mode": args.mode}) + "\n")
        return EXIT_REJECT
    meta = dict(doc.meta)
    meta.update(oracle={"mode": args.mode, "nodes": stats.nodes})
    lg = GraphDocument.of(g, labels).labeled()
    out.write(GraphDocument.of_labeled(lg, meta).emit() + "\n")
    return EXIT_OK


def cmd_export_dot(args, out, stdin):
    doc = _read(args.document, stdin)
    out.write(to_dot(doc.labeled()))
    return EXIT_OK


def cmd_sweep(args, out, stdin):
    report = sweep(args.family, args.max_edges, args.workers)
    out.write(report.table() + "\n")
    return EXIT_OK if report.ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="antimagic", description="Strongly antimagic labelings of graph families.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit the canonical graph of a family member")
    g.add_argument("family")
    g.add_argument("params", nargs="*")
    g.set_defaults(func=cmd_gen)

    lab = sub.add_parser("label", help="label a family member or a graph document")
    lab.add_argument("target", help="family name, '-' for stdin or a .json document")
    lab.add_argument("params", nargs="*")
    lab.add_argument("--scheme", choices=SCHEMES, default="auto")
    lab.set_defaults(func=cmd_label)

    v = sub.add_parser("verify", help="check a labeled document")
    v.add_argument("document")
    v.add_argument("--strong", action="store_true", help="require the degree ordering too")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exhaustive search on a small graph")
    o.add_argument("document")
    o.add_argument("--count", action="store_true")
    o.add_argument("--mode", choices=(STRONG, ANTI), default=STRONG)
    o.add_argument("--workers", type=int, default=1)
    o.add_argument("--budget", type=int, default=5_000_000, help="node budget")
    o.add_argument("--time-limit", type=float, default=None, help="seconds")
    o.set_defaults(func=cmd_oracle)

    d = sub.add_parser("export-dot", help="DOT text for a labeled document")
    d.add_argument("document")
    d.set_defaults(func=cmd_export_dot)

    s = sub.add_parser("sweep", help="label and verify every shape of a family")
    s.add_argument("family", choices=sorted(ENUMERATORS))
    s.add_argument("--max-edges", type=int, required=True)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_sweep)
    return p


def _code(exc: AntimagicError) -> int:
    if isinstance(exc, (ParseError, LabelSetInvalid)):
        return EXIT_PARSE
    if isinstance(exc, (ShapeInvalid, ShapeMismatch)):
        return EXIT_SHAPE
    if isinstance(exc, VerificationFailed):
        return EXIT_VERIFY
    return EXIT_OTHER


def main(argv=None, out=None, stdin=None) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out, stdin)
    except AntimagicError as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return _code(exc)
    except ValueError as exc:
        sys.stderr.write(json.dumps({"error": "ShapeInvalid", "message": str(exc)}) + "\n")
        return EXIT_SHAPE


if __name__ == "__main__":
    sys.exit(main())
