"""Command line: ``e7cg verify`` and ``e7cg export``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import cg_algebra as cg
from .exact_core import qstr
from .verify import ALL, SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_operand(tok: str):
    tok = tok.strip()
    if tok == "id":
        return tok
    try:
        k = int(tok)
    except ValueError:
        raise UsageError(f"bad operand {tok!r}: expected a wedge index or 'id'") from None
    if not 0 <= k < cg.NWEDGE:
        raise UsageError(f"wedge index {k} out of range [0, {cg.NWEDGE})")
    return k


def parse_pairs(spec: str) -> list:
    out = []
    for chunk in spec.split(";"):
        if not chunk.strip():
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise UsageError(f"bad pair {chunk!r}: expected 'p,q'")
        out.append(tuple(parse_operand(p) for p in parts))
    if not out:
        raise UsageError("no pairs given")
    return out


def _operand(x) -> cg.WedgeSum:
    if x == "id":
        return cg.identity_wedges()
    p, q = cg.wedge_pair(x)
    return cg.WedgeSum.from_coords({(p, q): 1})


def product_record(left, right) -> dict:
    prod = cg.wedge_decompose(cg.star(_operand(left), _operand(right)))
    coords = [{"index": cg.wedge_index(p, q), "pair": [p, q], "value": qstr(v)}
              for (p, q), v in sorted(prod.coords().items())]
    return {"left": str(left), "right": str(right), "coordinates": coords,
            "counit": qstr(cg.counit(prod))}


def export_products(pairs: list, out: Path) -> dict:
    doc = {"product": "star", "basis": "e_p ^ e_q, p < q, index in [0, 1540)",
           "products": [product_record(l, r) for l, r in pairs]}
    try:
        out.write_text(json.dumps(doc, indent=1) + "\n")
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from None
    return doc


def _print_report(report) -> None:
    for c in report.checks:
        print(f"{c.status.upper():4}  {c.name}")
    print(f"{len(report.checks) - len(report.failures)}/{len(report.checks)} checks passed "
          f"({report.wall_time:.1f}s)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="e7cg", description="Exact checks for the E7 Chayet-Garibaldi algebra.")
    sub = ap.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, choices=SUITES + (ALL,))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=3)
    v.add_argument("--json-out", type=Path)
    v.add_argument("--no-timing", action="store_true", help="omit wall time from the JSON report")
    e = sub.add_parser("export", help="export star products of basis wedges")
    e.add_argument("--pairs", required=True, help='e.g. "0,1;5,id"')
    e.add_argument("--out", required=True, type=Path)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "verify":
            if args.samples < 1 or args.seed < 0:
                raise UsageError("--samples must be positive and --seed non-negative")
            report = run_suite(args.suite, args.seed, args.samples)
            _print_report(report)
            if args.json_out:
                try:
                    args.json_out.write_text(json.dumps(report.to_json(not args.no_timing), indent=1) + "\n")
                except OSError as exc:
                    raise UsageError(f"cannot write {args.json_out}: {exc}") from None
            return EXIT_OK if report.ok else EXIT_FAIL
        pairs = parse_pairs(args.pairs)
        doc = export_products(pairs, args.out)
        print(f"wrote {len(doc['products'])} products to {args.out}")
        return EXIT_OK
    except UsageError as exc:
        print(f"e7cg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
