"""Command-line interface.

Exit codes: 0 success (all claims pass), 1 some claim failed, 2 usage or
input error (unknown flag, bad file, corrupt checkpoint, budget exceeded).
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Sequence

from . import claims as claims_mod
from .census import (BudgetExceeded, CheckpointMismatch, SearchSpace, run_census)
from .families import monomial_key
from .gf import field_from_literal, parse_element
from .io import (SchemaError, file_hash, load_surface, make_report, resolve_family,
                 save_report)
from .picard import (TableError, base_locus_count, candidate_fields,
                     exceptional_classes, fibers, filter_rows, min_trace_on_pic,
                     parse_table, urabe_f, weil_count)
from .smooth import ExtensionTooLarge, is_smooth_up_to


class UsageError(Exception):
    pass


def _emit(obj, out: str | None, argv: Sequence[str], inputs=None, wall_time=None) -> None:
    if out:
        save_report(make_report(list(argv), obj, inputs, wall_time), out)
    print(json.dumps(obj, indent=2, sort_keys=True))


def _parse_pin(text: str, fam, field) -> tuple[int, int]:
    slot, sep, value = text.partition("=")
    if not sep:
        raise UsageError(f"--pin expects slot=value, got {text!r}")
    slot = slot.strip()
    try:
        idx = int(slot) if slot.isdigit() else fam.slot(slot)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if not 0 <= idx < fam.n_slots:
        raise UsageError(f"slot {idx} out of range")
    try:
        return idx, parse_element(value.strip(), field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_census(args, argv) -> int:
    try:
        field = field_from_literal(args.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        fam = resolve_family(args.family, field)
    except SchemaError as exc:
        raise UsageError(str(exc)) from None
    pins = dict(_parse_pin(p, fam, field) for p in args.pin)
    space = SearchSpace(fam, field, pins)
    report = run_census(space, args.mode, args.early_exit, args.workers, args.checkpoint,
                        args.extremal_cap)
    payload = report.payload()
    summary = {"family": fam.id, "field": args.field, "scanned": report.scanned,
               "min_count": report.min_count, "max_count": report.max_count,
               "histogram": payload["histogram"]}
    if args.out:
        save_report(make_report(list(argv), payload, {"space": space.digest()}, report.wall_time),
                    args.out)
    print(json.dumps(summary, sort_keys=True))
    return 0


def cmd_verify(args, argv) -> int:
    if args.all:
        ids = [c for c in claims_mod.REGISTRY
               if args.include_slow or claims_mod.REGISTRY[c].runtime != "hours"]
    elif args.claim:
        ids = args.claim
    else:
        raise UsageError("verify needs --claim ID or --all")
    unknown = [c for c in ids if c not in claims_mod.REGISTRY]
    if unknown:
        raise UsageError(f"unknown claim id(s): {', '.join(unknown)}")
    results = []
    for cid in ids:
        res = claims_mod.verify_claim(cid)
        print(res.line(), flush=True)
        results.append(res)
    if args.out:
        save_report(make_report(list(argv), [r.to_json() for r in results]), args.out)
    return 0 if all(r.passed for r in results) else 1


def _surface_arg(path):
    if not os.path.exists(path):
        raise UsageError(f"no such file: {path}")
    return load_surface(path)


def cmd_smooth(args, argv) -> int:
    s = _surface_arg(args.surface)
    if args.max_ext < 1:
        raise UsageError("--max-ext must be >= 1")
    verdict = is_smooth_up_to(s, args.max_ext)
    _emit(verdict.to_json(), args.out, argv, {"surface": file_hash(args.surface)})
    return 0


def cmd_fibers(args, argv) -> int:
    s = _surface_arg(args.surface)
    if s.family.ambient.weights != (1, 1, 2, 3):
        raise UsageError("fibers needs a degree-1 surface in P(1,1,2,3)")
    reps = fibers(s, args.max_ext)
    payload = {"fibers": [r.to_json() for r in reps], "base_locus": base_locus_count(s),
               "q": s.field.q}
    _emit(payload, args.out, argv, {"surface": file_hash(args.surface)})
    return 0


def cmd_exc(args, argv) -> int:
    if not 0 <= args.r <= 8:
        raise UsageError("--r must lie in 0..8")
    classes = exceptional_classes(args.r)
    _emit({"r": args.r, "count": len(classes),
           "classes": [[c.d, *c.m] for c in classes]}, args.out, argv)
    return 0


def cmd_weil(args, argv) -> int:
    try:
        lo = min_trace_on_pic(args.degree)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.target_points < 0:
        raise UsageError("--target-points must be nonnegative")
    qs = candidate_fields(args.degree, args.target_points)
    rows = [{"q": q, "trace": (args.target_points - 1 - q * q) // q} for q in qs]
    _emit({"degree": args.degree, "target": args.target_points, "min_trace": lo,
           "candidates": rows}, args.out, argv)
    return 0


def cmd_urabe(args, argv) -> int:
    if not os.path.exists(args.table):
        raise UsageError(f"no such file: {args.table}")
    rows = parse_table(args.table)
    hits = filter_rows(rows, args.q, args.target)
    _emit({"q": args.q, "target": args.target, "rows": hits,
           "traces": {str(r.row): r.trace for r in rows if r.row in hits}},
          args.out, argv, {"table": file_hash(args.table)})
    return 0


def cmd_urabe_f(args, argv) -> int:
    if not 1 <= args.i <= 60:
        raise UsageError("--i must lie in 1..60")
    _emit({"i": args.i, "f": urabe_f(args.i)}, args.out, argv)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dpcount", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="point-count histogram over a coefficient space")
    p.add_argument("--family", required=True, help="built-in id, optionally with ':reduced'")
    p.add_argument("--field", required=True, help='field literal, e.g. "2", "4", "3^2"')
    p.add_argument("--pin", action="append", default=[], metavar="SLOT=VALUE",
                   help="fix a slot (index, monomial key e0.e1.e2.e3, or name like x^2*w)")
    p.add_argument("--mode", choices=("projective", "affine"), default="projective")
    p.add_argument("--early-exit", type=int, default=None)
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.add_argument("--checkpoint", default=None)
    p.add_argument("--extremal-cap", type=int, default=64)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="check registered claims")
    p.add_argument("--claim", action="append", default=[])
    p.add_argument("--all", action="store_true")
    p.add_argument("--include-slow", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("smooth", help="singularity scan up to an extension degree")
    p.add_argument("--surface", required=True)
    p.add_argument("--max-ext", type=int, default=3)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_smooth)

    p = sub.add_parser("fibers", help="fibres of the anticanonical pencil of a degree-1 surface")
    p.add_argument("--surface", required=True)
    p.add_argument("--max-ext", type=int, default=2)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_fibers)

    p = sub.add_parser("exc-curves", help="exceptional classes on a blowup of r points")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_exc)

    p = sub.add_parser("weil", help="fields where the Weil formula allows a point count")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--target-points", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_weil)

    p = sub.add_parser("urabe", help="rows of a conjugacy-class table matching a point count")
    p.add_argument("--table", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--target", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_urabe)

    p = sub.add_parser("urabe-f", help="row map from the E7 table to the E8 table")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_urabe_f)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args, argv)
    except (UsageError, SchemaError, TableError, CheckpointMismatch, BudgetExceeded,
            ExtensionTooLarge, OSError) as exc:
        print(f"dpcount {args.command}: error: {exc}", file=sys.stderr)
        if isinstance(exc, UsageError):
            parser.print_usage(sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
