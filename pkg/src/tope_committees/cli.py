"""Command-line front end.

Exit status: 0 on success, 1 when the input fails validation (or a
cross-check disagrees), 2 on parse, usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .committees import committees_to_dict, enumerate_committees3
from .convexity import LatticeError, build_lattice
from .graphs import FormulaError, KINDS, build_graph, graph_to_dict, to_dot
from .ingest import arrangement_topes, read_arrangement
from .report import counts_report
from .signs import (ParseError, ToposSet, ValidationReport, format_subset, from_mask,
                    read_topes, validate)


class _Exit(Exception):
    def __init__(self, code: int, message: str = ""):
        self.code = code
        self.message = message


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _table(rows: Sequence[tuple[str, object]]) -> str:
    width = max((len(k) for k, _ in rows), default=0)
    return "".join(f"{k:<{width}}  {'-' if v is None else v}\n" for k, v in rows)


def _write(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _format_report(report: ValidationReport) -> str:
    lines = ["ok" if report.ok else "INVALID"]
    lines += [f"violation [{v.rule}] {v.message}" for v in report.violations]
    lines += [f"warning [{v.rule}] {v.message}" for v in report.warnings]
    return "\n".join(lines) + "\n"


def _load(args) -> ToposSet:
    ts = read_topes(args.topes)
    report = validate(ts, strict=args.strict)
    for w in report.warnings:
        print(f"warning: {w.message}", file=sys.stderr)
    if not report.ok:
        sys.stdout.write(_dump_json(report.to_dict()) if args.json else _format_report(report))
        raise _Exit(1)
    return ts


# ---------------------------------------------------------------------------
# subcommands

def cmd_validate(args) -> int:
    ts = read_topes(args.topes)
    report = validate(ts, strict=args.strict)
    if args.json:
        out = {"n": ts.n, "tope_count": len(ts), **report.to_dict()}
        _write(args, _dump_json(out))
    else:
        _write(args, f"n = {ts.n}, {len(ts)} topes\n" + _format_report(report))
    return 0 if report.ok else 1


def cmd_lattice(args) -> int:
    ts = _load(args)
    lat = build_lattice(ts, verify=args.verify)
    if args.json:
        _write(args, _dump_json(lat.to_dict()))
        return 0
    lines = [f"{len(lat)} members (including the empty set and E)"]
    for m in lat.member_masks:
        if m == lat.top:
            lines.append("{" + format_subset(from_mask(m)) + "}  top")
            continue
        tags = []
        if m in lat.coatom_masks:
            tags.append("coatom")
        if m in lat.free_masks:
            tags.append("free")
        lines.append(f"{{{format_subset(from_mask(m))}}}  mu={lat.mobius_values[m]}"
                     + (f"  {' '.join(tags)}" if tags else ""))
    _write(args, "\n".join(lines) + "\n")
    return 0


def cmd_committees(args) -> int:
    ts = _load(args)
    found = enumerate_committees3(ts, restrict_max_positive=args.max_positive)
    if args.json:
        _write(args, _dump_json({"count": len(found),
                                 "max_positive_only": args.max_positive,
                                 "committees": committees_to_dict(ts, found)}))
        return 0
    lines = [f"{len(found)} committee(s)"]
    for c in found:
        topes = c.topes(ts)
        negs = " ".join("{" + format_subset(i + 1 for i, s in enumerate(t) if s == "-") + "}"
                        for t in topes)
        lines.append(f"{' '.join(topes)}   negative parts {negs}"
                     + ("   max-positive" if c.max_positive else ""))
    _write(args, "\n".join(lines) + "\n")
    return 0


def cmd_graph(args) -> int:
    ts = _load(args)
    kind = args.kind.replace("-", "_")
    lat = build_lattice(ts) if kind == "gamma_max" else None
    g = build_graph(ts, kind, lat)
    fmt = args.format or ("json" if args.json else "dot")
    _write(args, _dump_json(graph_to_dict(g, ts)) if fmt == "json" else to_dot(g, ts))
    return 0


def cmd_counts(args) -> int:
    ts = _load(args)
    lat = build_lattice(ts)
    report = counts_report(ts, lat, cross_check=args.cross_check)
    d = report.to_dict()
    _write(args, _dump_json(d) if args.json else _table(list(d.items())))
    return 1 if report.all_consistent is False else 0


def _parse_reorient(text: str | None) -> frozenset[int]:
    if not text:
        return frozenset()
    try:
        return frozenset(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise _Exit(2, f"bad --reorient value {text!r}; expected e.g. 1,2") from None


def cmd_ingest(args) -> int:
    arr = read_arrangement(args.arrangement)
    flip = _parse_reorient(args.reorient)
    try:
        ts = arrangement_topes(arr, flip)
    except ValueError as exc:
        raise _Exit(2, str(exc)) from None
    report = validate(ts, strict=args.strict)
    for w in report.warnings:
        print(f"warning: {w.message}", file=sys.stderr)
    _write(args, ts.to_text())
    if not report.ok:
        sys.stderr.write(_format_report(report))
        return 1
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--strict", action="store_true", default=argparse.SUPPRESS,
                        help="treat an acyclic tope set as invalid")
    common.add_argument("-o", "--output", metavar="FILE", default=argparse.SUPPRESS,
                        help="write to FILE instead of stdout")

    parser = argparse.ArgumentParser(
        prog="tope-committees", parents=[common],
        description="Three-tope committees of simple oriented matroids.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("validate", parents=[common], help="check a .topes file")
    p.add_argument("topes")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("lattice", parents=[common], help="lattice of convex sets")
    p.add_argument("topes")
    p.add_argument("--verify", action="store_true",
                   help="cross-check Möbius values against the recursive definition")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("committees", parents=[common], help="list three-tope committees")
    p.add_argument("topes")
    p.add_argument("--max-positive", action="store_true",
                   help="only committees of topes with maximal positive parts")
    p.set_defaults(func=cmd_committees)

    p = sub.add_parser("graph", parents=[common], help="export a tope graph")
    p.add_argument("topes")
    p.add_argument("--kind", default="gamma",
                   choices=[k.replace("_", "-") for k in KINDS] + list(KINDS))
    p.add_argument("--format", choices=("dot", "json"))
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("counts", parents=[common], help="closed-form counts")
    p.add_argument("topes")
    p.add_argument("--cross-check", action="store_true",
                   help="also count by direct enumeration and compare")
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("ingest", parents=[common],
                       help="tope set of a central arrangement (.arr -> .topes)")
    p.add_argument("--arrangement", required=True, metavar="FILE")
    p.add_argument("--reorient", metavar="E1,E2,...")
    p.set_defaults(func=cmd_ingest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    args.strict = getattr(args, "strict", False)
    try:
        return args.func(args)
    except _Exit as exc:
        if exc.message:
            print(f"error: {exc.message}", file=sys.stderr)
        return exc.code
    except (ParseError, OSError, LatticeError, FormulaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
