"""Cellular chain complexes of the three CW structures."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from .cells import Cell, Kind, enumerate_cells
from .diagrams import leq
from .errors import DomainError
from .incidence import degree

Entries = Dict[Tuple[int, int], int]


@dataclass
class ChainComplex:
    """
    Cells grouped by dimension, in canonical order, with sparse boundary
    matrices: ``boundary[d][(r, c)]`` is the degree of the d-cell ``c`` onto
    the (d-1)-cell ``r`` (indices local to each dimension).
    """

    n: int
    space: str
    cells: Dict[int, List[Cell]]
    boundary: Dict[int, Entries] = field(default_factory=dict)

    @property
    def top_dim(self) -> int:
        return max(self.cells) if self.cells else -1

    def cells_in(self, d: int) -> List[Cell]:
        return self.cells.get(d, [])

    def all_cells(self) -> List[Cell]:
        return [c for d in sorted(self.cells) for c in self.cells[d]]

    def rank(self, d: int) -> int:
        return len(self.cells_in(d))

    def matrix(self, d: int) -> np.ndarray:
        """Dense boundary matrix from d-chains to (d-1)-chains."""
        M = np.zeros((self.rank(d - 1), self.rank(d)), dtype=np.int64)
        for (r, c), v in self.boundary.get(d, {}).items():
            M[r, c] = v
        return M

    def entry(self, d: int, r: int, c: int) -> int:
        return self.boundary.get(d, {}).get((r, c), 0)

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(cs) for d, cs in self.cells.items())

    def dims(self) -> range:
        return range(0, self.top_dim + 1)

    def nonzero_entries(self):
        """(d, target cell, source cell, degree) for every nonzero entry."""
        for d in sorted(self.boundary):
            rows, cols = self.cells_in(d - 1), self.cells_in(d)
            for (r, c), v in sorted(self.boundary[d].items(), key=lambda kv: (kv[0][1], kv[0][0])):
                yield d, rows[r], cols[c], v

    def same_as(self, other: "ChainComplex") -> bool:
        if self.cells != other.cells:
            return False
        clean = lambda b: {d: {k: v for k, v in e.items() if v} for d, e in b.items() if any(e.values())}
        return clean(self.boundary) == clean(other.boundary)


def group_by_dim(cells: List[Cell]) -> Dict[int, List[Cell]]:
    out: Dict[int, List[Cell]] = {}
    for c in cells:
        out.setdefault(c.dim, []).append(c)
    return out


def _may_be_incident(c: Cell, c2: Cell) -> bool:
    if not leq(c.lam, c2.lam):
        return False
    if c.kind is Kind.MIXED and not leq(c.mu, c2.mu):
        return False
    return True


def build(n: int, space: str, max_n: Optional[int] = None) -> ChainComplex:
    """
    Enumerate the cells and fill in every boundary entry.  Only pairs passing
    the frontier test (nested diagrams) are sent to the degree formulas.
    """
    if space not in ("real", "complex", "mixed"):
        raise DomainError(f"unknown space {space!r}")
    cells = group_by_dim(enumerate_cells(n, space, max_n))
    cc = ChainComplex(n, space, cells)
    if space == "complex":
        return cc
    for d in sorted(cells):
        if d == 0:
            continue
        rows = cells.get(d - 1, [])
        entries: Entries = {}
        for j, c2 in enumerate(cells[d]):
            for i, c in enumerate(rows):
                if _may_be_incident(c, c2):
                    v = degree(c, c2)
                    if v:
                        entries[(i, j)] = v
        cc.boundary[d] = entries
    return cc


def _compose(outer: Entries, inner: Entries) -> Entries:
    """outer @ inner on sparse coordinate dictionaries."""
    by_row: Dict[int, List[Tuple[int, int]]] = {}
    for (k, c), v in inner.items():
        by_row.setdefault(k, []).append((c, v))
    out: Entries = {}
    for (r, k), a in outer.items():
        for c, b in by_row.get(k, ()):
            out[(r, c)] = out.get((r, c), 0) + a * b
    return {k: v for k, v in out.items() if v}


def verify_ddzero(cc: ChainComplex) -> List[Tuple[int, int, int, int]]:
    """
    Every (d, row, col, value) with (d_d o d_{d+1})[row, col] != 0; empty
    when the complex is consistent.
    """
    bad = []
    for d in sorted(cc.boundary):
        if d + 1 not in cc.boundary:
            continue
        prod = _compose(cc.boundary[d], cc.boundary[d + 1])
        bad.extend((d, r, c, v) for (r, c), v in sorted(prod.items()))
    return bad


def real_subcomplex(cc: ChainComplex) -> ChainComplex:
    """Restriction of a mixed complex to the mu = φ cells, relabelled as real cells."""
    if cc.space != "mixed":
        raise DomainError("real_subcomplex needs a mixed complex")
    cells: Dict[int, List[Cell]] = {}
    index: Dict[int, Dict[int, int]] = {}
    for d, cs in cc.cells.items():
        keep = [(i, c) for i, c in enumerate(cs) if c.mu.is_empty()]
        if keep:
            cells[d] = [Cell(Kind.REAL, c.lam) for _, c in keep]
            index[d] = {old: new for new, (old, _) in enumerate(keep)}
    out = ChainComplex(cc.n, "real", cells)
    for d, entries in cc.boundary.items():
        if d not in index:
            continue
        rows, cols = index.get(d - 1, {}), index[d]
        out.boundary[d] = {
            (rows[r], cols[c]): v
            for (r, c), v in entries.items()
            if r in rows and c in cols
        }
    return out


def stabilize(c: Cell, m: int) -> Cell:
    return c.stabilize(m)
