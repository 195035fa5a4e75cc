"""
Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
bound exceeded, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import List, Optional

from .cells import DEFAULT_MAX_N, enumerate_cells
from .chain import ChainComplex, build
from .errors import DomainError, IntegrityError, ResourceError
from .export import cell_record, dumps, to_dot
from .homology import homology
from .verify import CHECKS, run_checks

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_RESOURCE, EXIT_IO = 0, 1, 2, 3, 4

log = logging.getLogger("lagcell")


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lagcell",
        description="Schubert cell complexes of real and complex Lagrangian Grassmannians.",
    )
    p.add_argument("command", choices=["cells", "boundary", "homology", "verify", "export"])
    p.add_argument("--n", type=int, required=True, help="rank n (subspaces of R^2n or C^2n)")
    p.add_argument(
        "--space",
        choices=["real", "complex", "mixed"],
        help="required except for verify, which checks every space when omitted",
    )
    p.add_argument("--dim", type=int, help="restrict output to one dimension")
    p.add_argument("--coefficients", choices=["Z", "Z2"], default="Z")
    p.add_argument("--format", choices=["table", "json", "csv", "dot"], default=None)
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--checks", default=",".join(CHECKS), help="comma-separated subset of " + ",".join(CHECKS))
    p.add_argument("--samples", type=int, default=3, help="random points per cover for the Jacobian oracle")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, dest="max_n", help="raise the enumeration bound")
    return p


def _csv(rows: List[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _columns(rows: List[list]) -> str:
    rows = [[str(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "".join("  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip() + "\n" for r in rows)


def cmd_cells(args) -> str:
    cells = enumerate_cells(args.n, args.space, args.max_n)
    if args.dim is not None:
        cells = [c for c in cells if c.dim == args.dim]
    fmt = args.format or "table"
    if fmt == "json":
        return _json([cell_record(i, c) for i, c in enumerate(cells)])
    rows = [["id", "cell", "dim"]] + [[i, c.label(), c.dim] for i, c in enumerate(cells)]
    if fmt == "csv":
        return _csv(rows)
    if fmt != "table":
        raise UsageError(f"cells does not support --format {fmt}")
    return _columns(rows)


def _boundary_dims(cc: ChainComplex, dim: Optional[int]):
    dims = [d for d in cc.dims() if d > 0]
    if dim is not None:
        if dim not in dims:
            raise UsageError(f"no boundary map out of dimension {dim}")
        dims = [dim]
    return dims


def cmd_boundary(args) -> str:
    cc = build(args.n, args.space, args.max_n)
    dims = _boundary_dims(cc, args.dim)
    fmt = args.format or "table"
    if fmt == "json":
        return _json(
            {
                str(d): {
                    "rows": [c.label() for c in cc.cells_in(d - 1)],
                    "columns": [c.label() for c in cc.cells_in(d)],
                    "matrix": cc.matrix(d).tolist(),
                }
                for d in dims
            }
        )
    if fmt == "csv":
        rows = [["d", "target", "source", "degree"]]
        for d, target, source, v in cc.nonzero_entries():
            if d in dims:
                rows.append([d, target.label(), source.label(), v])
        return _csv(rows)
    if fmt != "table":
        raise UsageError(f"boundary does not support --format {fmt}")
    out = []
    for d in dims:
        rows_, cols = cc.cells_in(d - 1), cc.cells_in(d)
        out.append(f"d_{d}: {len(cols)} cells -> {len(rows_)} cells")
        if rows_ and cols:
            M = cc.matrix(d)
            table = [[""] + [c.label() for c in cols]]
            table += [[r.label()] + list(M[i]) for i, r in enumerate(rows_)]
            out.append(_columns(table).rstrip("\n"))
    return "\n".join(out) + "\n"


def cmd_homology(args) -> str:
    cc = build(args.n, args.space, args.max_n)
    h = homology(cc, args.coefficients)
    dims = list(cc.dims()) if args.dim is None else [args.dim]
    fmt = args.format or "table"
    if fmt == "json":
        return _json(
            {
                "n": args.n,
                "space": args.space,
                "coefficients": args.coefficients,
                "groups": [
                    {"d": d, "free_rank": h.group(d)[0], "torsion": h.group(d)[1], "group": h.group_str(d)}
                    for d in dims
                ],
            }
        )
    rows = [["d", "H_d"]] + [[d, h.group_str(d)] for d in dims]
    if fmt == "csv":
        return _csv(rows)
    if fmt != "table":
        raise UsageError(f"homology does not support --format {fmt}")
    return _columns(rows)


def cmd_export(args) -> str:
    cc = build(args.n, args.space, args.max_n)
    fmt = args.format or "json"
    if fmt == "json":
        return dumps(cc, args.seed)
    if fmt == "dot":
        return to_dot(cc)
    raise UsageError(f"export supports json and dot, not {fmt}")


def cmd_verify(args):
    names = [s.strip() for s in args.checks.split(",") if s.strip()]
    unknown = [s for s in names if s not in CHECKS]
    if unknown or not names:
        raise UsageError(f"unknown checks {unknown}; choose from {','.join(CHECKS)}")
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    results = run_checks(names, args.n, args.space, args.samples, args.seed, args.max_n)
    out = []
    for r in results:
        out.append(r.summary())
        out.extend("  " + line for line in r.lines)
        if r.counterexample:
            out.append("  counterexample: " + r.counterexample)
    ok = all(r.passed for r in results)
    return "\n".join(out) + "\n", ok


def _emit(text: str, path: Optional[str]):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(format="%(name)s: %(levelname)s: %(message)s")
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.space is None and args.command != "verify":
        print(f"lagcell: error: {args.command} requires --space", file=sys.stderr)
        return EXIT_USAGE
    if args.max_n is not None:
        default = min(DEFAULT_MAX_N[s] for s in ([args.space] if args.space else DEFAULT_MAX_N))
        if args.max_n > default:
            log.warning(
                "--max-n %d exceeds the default bound %d for the %s space; "
                "enumeration may be slow and memory hungry",
                args.max_n, default, args.space or "mixed",
            )
    ok = True
    try:
        if args.command == "verify":
            text, ok = cmd_verify(args)
        else:
            handler = {
                "cells": cmd_cells,
                "boundary": cmd_boundary,
                "homology": cmd_homology,
                "export": cmd_export,
            }[args.command]
            text = handler(args)
        _emit(text, args.out)
    except (UsageError, DomainError) as exc:
        print(f"lagcell: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"lagcell: error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except IntegrityError as exc:
        print(f"lagcell: verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except OSError as exc:
        print(f"lagcell: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK if ok else EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
