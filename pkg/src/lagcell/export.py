"""JSON documents and Graphviz DOT renderings of chain complexes."""

from __future__ import annotations

import json
from typing import Optional

from .cells import Cell, Kind, SignAssignment
from .chain import ChainComplex, group_by_dim
from .diagrams import ShiftedDiagram
from .errors import DomainError

SCHEMA_VERSION = 1


def _tool_version() -> str:
    from . import __version__

    return __version__


def cell_record(i: int, c: Cell) -> dict:
    return {
        "id": i,
        "kind": c.kind.value,
        "lambda": list(c.lam.parts),
        "mu": list(c.mu.parts) if c.mu is not None else None,
        "eps": list(c.eps.signs) if c.eps is not None else None,
        "dim": c.dim,
    }


def to_document(cc: ChainComplex, seed: Optional[int] = None) -> dict:
    """
    The complex as plain data.  Cell ids are dense indices in canonical
    order; only nonzero boundary entries are listed.
    """
    cells = cc.all_cells()
    offset, ids = {}, 0
    for d in sorted(cc.cells):
        offset[d] = ids
        ids += len(cc.cells[d])
    boundary = []
    for d in sorted(cc.boundary):
        for (r, c), v in sorted(cc.boundary[d].items(), key=lambda kv: (kv[0][1], kv[0][0])):
            if v:
                boundary.append(
                    {"target_id": offset[d - 1] + r, "source_id": offset[d] + c, "degree": v}
                )
    return {
        "schema_version": SCHEMA_VERSION,
        "n": cc.n,
        "space": cc.space,
        "cells": [cell_record(i, c) for i, c in enumerate(cells)],
        "boundary": boundary,
        "provenance": {"tool": "lagcell", "version": _tool_version(), "seed": seed},
    }


def dumps(cc: ChainComplex, seed: Optional[int] = None) -> str:
    return json.dumps(to_document(cc, seed), indent=2, ensure_ascii=False) + "\n"


def _cell_from_record(rec: dict, n: int) -> Cell:
    kind = Kind(rec["kind"])
    lam = ShiftedDiagram(n, tuple(rec["lambda"]))
    if kind is not Kind.MIXED:
        return Cell(kind, lam)
    mu = ShiftedDiagram(n, tuple(rec["mu"]))
    return Cell(kind, lam, mu, SignAssignment.for_diagram(mu, rec["eps"]))


def from_document(doc: dict) -> ChainComplex:
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise DomainError(f"unsupported schema version {doc.get('schema_version')!r}")
    n = doc["n"]
    cells = [_cell_from_record(rec, n) for rec in sorted(doc["cells"], key=lambda r: r["id"])]
    for i, (rec, c) in enumerate(zip(doc["cells"], cells)):
        if rec["id"] != i or rec["dim"] != c.dim:
            raise DomainError(f"cell record {i} is inconsistent")
    grouped = group_by_dim(cells)
    local = {}
    for d, cs in grouped.items():
        for j, c in enumerate(cs):
            local[c] = (d, j)
    cc = ChainComplex(n, doc["space"], grouped)
    for d in grouped:
        if d > 0 and doc["space"] != "complex":
            cc.boundary[d] = {}
    for e in doc["boundary"]:
        dt, r = local[cells[e["target_id"]]]
        ds, c = local[cells[e["source_id"]]]
        if ds != dt + 1:
            raise DomainError(f"boundary entry {e} does not lower dimension by one")
        cc.boundary.setdefault(ds, {})[(r, c)] = e["degree"]
    return cc


def loads(text: str) -> ChainComplex:
    return from_document(json.loads(text))


def _part_str(d: Optional[ShiftedDiagram]) -> str:
    return "" if d is None else str(d)


def node_label(c: Cell) -> str:
    """"lambda;mu;eps/dim", with empty mu and eps fields for unmixed cells."""
    eps = str(c.eps) if c.eps is not None else ""
    return f"{c.lam};{_part_str(c.mu)};{eps}/{c.dim}"


def to_dot(cc: ChainComplex) -> str:
    """
    One node per cell and one edge per nonzero degree, drawn from the
    higher-dimensional cell to the lower one.  Negative degrees are dashed
    and degrees of absolute value two are drawn twice as thick.
    """
    cells = cc.all_cells()
    ids = {c: i for i, c in enumerate(cells)}
    lines = [f"digraph lagcell_{cc.space}_{cc.n} {{", "  rankdir=BT;"]
    for c in cells:
        lines.append(f'  c{ids[c]} [label="{node_label(c)}"];')
    for _, target, source, deg in cc.nonzero_entries():
        attrs = [f"deg={deg}"]
        if deg < 0:
            attrs.append("style=dashed")
        if abs(deg) == 2:
            attrs.append("penwidth=2")
        lines.append(f"  c{ids[source]} -> c{ids[target]} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
