"""Cells of the complex, real and mixed-type CW structures."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from .diagrams import Box, ShiftedDiagram, all_diagrams, corners, interior, leq
from .errors import DomainError, ResourceError

# Enumeration bounds; raise these via the CLI's --max-n.
DEFAULT_MAX_N = {"complex": 8, "real": 8, "mixed": 5}


class Kind(Enum):
    COMPLEX = "complex"
    REAL = "real"
    MIXED = "mixed"


@dataclass(frozen=True)
class SignAssignment:
    """Signs on the corners of mu, stored in lexicographic corner order."""

    corners: Tuple[Box, ...]
    signs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.corners) != len(self.signs):
            raise DomainError("one sign per corner required")
        if any(s not in (1, -1) for s in self.signs):
            raise DomainError(f"signs must be +1 or -1, got {self.signs}")

    @classmethod
    def for_diagram(cls, mu: ShiftedDiagram, signs) -> "SignAssignment":
        return cls(corners(mu), tuple(signs))

    def __getitem__(self, box: Box) -> int:
        try:
            return self.signs[self.corners.index(box)]
        except ValueError:
            raise DomainError(f"{box} is not a corner") from None

    def as_dict(self) -> Dict[Box, int]:
        return dict(zip(self.corners, self.signs))

    def __str__(self):
        return "".join("+" if s > 0 else "-" for s in self.signs)


def sign_assignments(mu: ShiftedDiagram) -> List[SignAssignment]:
    """E(mu) with + before -, first corner varying slowest."""
    cs = corners(mu)
    return [SignAssignment(cs, s) for s in itertools.product((1, -1), repeat=len(cs))]


@dataclass(frozen=True)
class Cell:
    kind: Kind
    lam: ShiftedDiagram
    mu: Optional[ShiftedDiagram] = None
    eps: Optional[SignAssignment] = None

    def __post_init__(self):
        if self.kind is Kind.MIXED:
            if self.mu is None or self.eps is None:
                raise DomainError("mixed cells need mu and eps")
            if not leq(self.mu, self.lam):
                raise DomainError(f"mu={self.mu} is not contained in lambda={self.lam}")
            if self.eps.corners != corners(self.mu):
                raise DomainError("sign assignment must live on the corners of mu")
        elif self.mu is not None or self.eps is not None:
            raise DomainError("only mixed cells carry mu and eps")

    @property
    def n(self) -> int:
        return self.lam.ambient_n

    @property
    def dim(self) -> int:
        if self.kind is Kind.COMPLEX:
            return 2 * self.lam.size
        if self.kind is Kind.REAL:
            return self.lam.size
        return self.lam.size + self.mu.size

    def sort_key(self):
        key = (self.dim, self.lam.parts)
        if self.kind is Kind.MIXED:
            key += (self.mu.parts, tuple(0 if s > 0 else 1 for s in self.eps.signs))
        return key

    def label(self) -> str:
        """
        Part list, followed for mixed cells by one symbol per box of lambda
        (rows separated by '|'): '·' free complex, '∘' real, '+'/'-' signed.
        """
        if self.lam.is_empty():
            return "φ"
        if self.kind is not Kind.MIXED:
            return str(self.lam)
        signs = self.eps.as_dict()
        inner = interior(self.mu)
        rows = []
        for k in range(1, self.lam.rows + 1):
            row = ""
            for l in range(k, self.lam.row_end(k) + 1):
                b = (k, l)
                if b in signs:
                    row += "+" if signs[b] > 0 else "-"
                elif b in inner:
                    row += "·"
                else:
                    row += "∘"
            rows.append(row)
        return str(self.lam) + "|".join(rows)

    def stabilize(self, m: int) -> "Cell":
        """Same labels viewed in rank n + m."""
        if m < 1:
            raise DomainError("stabilization needs m >= 1")
        n = self.n + m
        mu = self.mu.with_rank(n) if self.mu is not None else None
        return Cell(self.kind, self.lam.with_rank(n), mu, self.eps)

    def __str__(self):
        return f"{self.label()}/{self.dim}"


def complex_cell(lam):
    return Cell(Kind.COMPLEX, lam)


def real_cell(lam):
    return Cell(Kind.REAL, lam)


def mixed_cell(lam, mu, signs=()):
    return Cell(Kind.MIXED, lam, mu, SignAssignment.for_diagram(mu, signs))


def check_bound(n: int, space: str, max_n: Optional[int] = None):
    if n < 1:
        raise DomainError(f"rank must be at least 1, got {n}")
    bound = DEFAULT_MAX_N[space] if max_n is None else max_n
    if n > bound:
        raise ResourceError(
            f"n={n} exceeds the enumeration bound {bound} for the {space} space"
        )


def _sorted(cells):
    return sorted(cells, key=Cell.sort_key)


def enumerate_complex(n: int, max_n: Optional[int] = None) -> List[Cell]:
    check_bound(n, "complex", max_n)
    return _sorted(complex_cell(lam) for lam in all_diagrams(n))


def enumerate_real(n: int, max_n: Optional[int] = None) -> List[Cell]:
    check_bound(n, "real", max_n)
    return _sorted(real_cell(lam) for lam in all_diagrams(n))


def enumerate_mixed(n: int, max_n: Optional[int] = None) -> List[Cell]:
    check_bound(n, "mixed", max_n)
    diagrams = all_diagrams(n)
    cells = []
    for lam in diagrams:
        for mu in diagrams:
            if leq(mu, lam):
                for eps in sign_assignments(mu):
                    cells.append(Cell(Kind.MIXED, lam, mu, eps))
    return _sorted(cells)


def enumerate_cells(n: int, space: str, max_n: Optional[int] = None) -> List[Cell]:
    try:
        fn = {
            "complex": enumerate_complex,
            "real": enumerate_real,
            "mixed": enumerate_mixed,
        }[space]
    except KeyError:
        raise DomainError(f"unknown space {space!r}") from None
    return fn(n, max_n)
