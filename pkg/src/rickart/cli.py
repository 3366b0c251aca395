"""Command line front end: ``rickart classify | prove | catalog | hasse``."""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import catalog, render, theorems
from .classify import classify, classify_witness
from .constructions import MatrixStructure, ZModStructure, build_ring
from .errors import AxiomViolation, BadParameter, ParseError, RickartError, TooLarge
from .parse import parse_spec
from .projections import STAR_SCAN_BOUND, hasse_dot
from .ring import TABLE_BOUND
from .textio import load_witness_matrix

EXIT_OK, EXIT_ERROR, EXIT_AXIOM, EXIT_SIZE = 0, 1, 2, 3


def _add_ring_args(p):
    p.add_argument("target", help="catalog name, construction expression, or file containing one")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--max-scan", type=int, default=TABLE_BOUND,
                   help="largest ring to tabulate and classify in full (default %(default)s)")
    p.add_argument("--max-star-scan", type=int, default=STAR_SCAN_BOUND,
                   help="largest star-fixed scan in witness mode (default %(default)s)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--witness-mode", action="store_true",
                   help="certify or refute only the supplied witnesses")
    p.add_argument("--witness", action="append", default=[], metavar="FILE",
                   help="witness matrix file (modulus header, row-major entries); repeatable")


def build_parser():
    parser = argparse.ArgumentParser(prog="rickart", description="Rickart-type properties of finite *-rings")
    sub = parser.add_subparsers(dest="command", required=True)
    c = sub.add_parser("classify", help="classify a ring")
    _add_ring_args(c)
    p = sub.add_parser("prove", help="run the proposition checks on a ring")
    _add_ring_args(p)
    p.add_argument("checks", nargs="*", help="check ids (default: all)")
    p.add_argument("--subset-size", type=int, default=2,
                   help="largest self-adjoint subset S used for commutant checks (default %(default)s)")
    g = sub.add_parser("catalog", help="list built-in rings and their expected facts")
    g.add_argument("--format", choices=("table", "json"), default="table")
    h = sub.add_parser("hasse", help="DOT source of the projection Hasse diagram")
    h.add_argument("target")
    h.add_argument("--max-scan", type=int, default=TABLE_BOUND)
    return parser


def resolve_target(target):
    """``(spec, catalog entry or None)`` for a catalog name, a file, or an expression."""
    entry = catalog.lookup(target)
    if entry is not None:
        return entry.spec, entry
    if os.path.isfile(target):
        with open(target, encoding="utf-8") as fh:
            return parse_spec(fh.read()), None
    return parse_spec(target), None


def witness_code(R, path):
    """Encode a witness matrix file as an element code of the matrix ring R."""
    modulus, matrix = load_witness_matrix(path)
    s = R.structure
    if not (isinstance(s, MatrixStructure) and isinstance(s.base.structure, ZModStructure)):
        raise BadParameter(f"witness matrices need a matrix ring over Z_m, not {R.name}")
    if s.base.size != modulus or s.k != matrix.shape[0]:
        raise BadParameter(f"{path}: {matrix.shape[0]}x{matrix.shape[0]} matrix mod {modulus} "
                           f"does not belong to {R.name}")
    return int(s.encode(np.asarray(matrix, dtype=np.int64) % modulus))


def _load(args):
    spec, entry = resolve_target(args.target)
    R = build_ring(spec, table_bound=args.max_scan)
    witness_mode = args.witness_mode or (entry is not None and entry.mode == "witness")
    files = list(args.witness) or (list(entry.witnesses) if entry is not None and witness_mode else [])
    witnesses = tuple(witness_code(R, f) for f in files)
    if not witness_mode:
        R.require_tabled("--max-scan")
    return R, entry, witness_mode, witnesses


def cmd_classify(args, out):
    R, entry, witness_mode, witnesses = _load(args)
    if witness_mode:
        if not witnesses:
            raise BadParameter("witness mode needs at least one --witness FILE")
        report = classify_witness(R, witnesses, args.max_star_scan)
    else:
        report = classify(R, threads=args.threads)
    if entry is not None:
        diff = catalog.mismatches(entry, report)
        report.extras["catalog"] = {"entry": entry.name, "source": entry.source, "matches": not diff,
                                    "mismatches": {k: list(v) for k, v in diff.items()}}
    fmt = render.report_json if args.format == "json" else render.report_table
    out.write(fmt(report))
    return EXIT_OK


def cmd_prove(args, out):
    R, entry, witness_mode, witnesses = _load(args)
    unknown = sorted(set(args.checks) - set(theorems.check_ids()))
    if unknown:
        raise BadParameter(f"unknown check ids: {', '.join(unknown)}; known: {', '.join(theorems.check_ids())}")
    options = theorems.SuiteOptions(witnesses=witnesses, subset_size=args.subset_size,
                                    max_star_scan=args.max_star_scan, threads=args.threads)
    ledger = theorems.run_suite(R, args.checks or None, options)
    fmt = render.ledger_json if args.format == "json" else render.ledger_table
    out.write(fmt(R, ledger))
    return EXIT_ERROR if any(c.status == theorems.FAIL for c in ledger) else EXIT_OK


def cmd_catalog(args, out):
    rows = [{"name": e.name, "expression": e.expression, "mode": e.mode, "source": e.source,
             "expected": e.expected, "note": e.note} for e in catalog.ENTRIES]
    if args.format == "json":
        out.write(json.dumps(rows, indent=2, ensure_ascii=False) + "\n")
        return EXIT_OK
    width = max(len(r["name"]) for r in rows)
    for r in rows:
        expected = json.dumps(r["expected"], ensure_ascii=False, separators=(", ", ": "))
        out.write(f"{r['name'].ljust(width)}  {r['mode'].ljust(7)}  {r['source'].ljust(10)}  "
                  f"{r['expression']}  {expected}\n")
    return EXIT_OK


def cmd_hasse(args, out):
    spec, _ = resolve_target(args.target)
    R = build_ring(spec, table_bound=args.max_scan)
    out.write(hasse_dot(R))
    return EXIT_OK


COMMANDS = {"classify": cmd_classify, "prove": cmd_prove, "catalog": cmd_catalog, "hasse": cmd_hasse}


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    # check ids may follow options: prove m4z4 --witness A.mat grp-absent
    if args.command == "prove" and not any(e.startswith("-") for e in extra):
        args.checks = list(args.checks) + extra
    elif extra:
        parser.error(f"unrecognized arguments: {' '.join(extra)}")
    try:
        return COMMANDS[args.command](args, out)
    except AxiomViolation as exc:
        err.write(f"error: {exc}\n")
        return EXIT_AXIOM
    except TooLarge as exc:
        err.write(f"error: {exc}\n")
        return EXIT_SIZE
    except ParseError as exc:
        err.write(f"error: parse error at {exc}\n")
        return EXIT_ERROR
    except (RickartError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
