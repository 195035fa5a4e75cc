"""
Shifted Young diagrams inside the staircase of rank n.

A diagram is stored as its strictly decreasing row lengths.  Row k (1-based)
occupies the boxes (k, k), ..., (k, k + parts[k-1] - 1); the first index of a
box is the row, the second the column.  Boxes are always ordered
lexicographically (row-major).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import FrozenSet, Iterable, List, Tuple

from .errors import DomainError

Box = Tuple[int, int]


@dataclass(frozen=True)
class ShiftedDiagram:
    ambient_n: int
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if self.ambient_n < 1:
            raise DomainError(f"ambient rank must be positive, got {self.ambient_n}")
        if any(p < 1 for p in parts):
            raise DomainError(f"row lengths must be positive: {parts}")
        if any(a <= b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"row lengths must strictly decrease: {parts}")
        if parts and parts[0] > self.ambient_n:
            raise DomainError(f"{parts} does not fit in rank {self.ambient_n}")

    @classmethod
    def empty(cls, n: int) -> "ShiftedDiagram":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "ShiftedDiagram":
        return cls(n, tuple(range(n, 0, -1)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    def is_empty(self) -> bool:
        return not self.parts

    def row_end(self, k: int) -> int:
        """Column of the last box in row k (1-based)."""
        return k + self.parts[k - 1] - 1

    @cached_property
    def boxes(self) -> Tuple[Box, ...]:
        return tuple(
            (k, l)
            for k, p in enumerate(self.parts, start=1)
            for l in range(k, k + p)
        )

    @cached_property
    def box_set(self) -> FrozenSet[Box]:
        return frozenset(self.boxes)

    def __contains__(self, box) -> bool:
        k, l = box
        return 1 <= k <= self.rows and k <= l <= self.row_end(k)

    def __len__(self) -> int:
        return self.size

    def subset(self) -> Tuple[int, ...]:
        return subset_from_diagram(self)

    def with_rank(self, n: int) -> "ShiftedDiagram":
        return ShiftedDiagram(n, self.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "φ"
        return "[" + ",".join(str(p) for p in self.parts) + "]"


def diagram_from_subset(J: Iterable[int], n: int) -> ShiftedDiagram:
    """The diagram whose row lengths are n - j + 1 for j in J."""
    J = sorted(set(J))
    for j in J:
        if not 1 <= j <= n:
            raise DomainError(f"{j} is not in [1, {n}]")
    return ShiftedDiagram(n, tuple(n - j + 1 for j in J))


def subset_from_diagram(lam: ShiftedDiagram) -> Tuple[int, ...]:
    n = lam.ambient_n
    return tuple(n - p + 1 for p in lam.parts)


def complement(lam: ShiftedDiagram) -> Tuple[int, ...]:
    """I = [n] minus J, sorted."""
    J = set(subset_from_diagram(lam))
    return tuple(i for i in range(1, lam.ambient_n + 1) if i not in J)


def _check_rank(a: ShiftedDiagram, b: ShiftedDiagram):
    if a.ambient_n != b.ambient_n:
        raise DomainError(
            f"diagrams live in different ranks ({a.ambient_n} vs {b.ambient_n})"
        )


def leq(lam: ShiftedDiagram, lam2: ShiftedDiagram) -> bool:
    """Containment of diagrams aligned at (1, 1)."""
    _check_rank(lam, lam2)
    if lam.rows > lam2.rows:
        return False
    return all(a <= b for a, b in zip(lam.parts, lam2.parts))


def is_cover(lam: ShiftedDiagram, lam2: ShiftedDiagram) -> bool:
    return lam2.size == lam.size + 1 and leq(lam, lam2)


def all_diagrams(n: int) -> List[ShiftedDiagram]:
    """All 2**n diagrams of rank n, ordered by (size, parts)."""
    out = []
    for r in range(n + 1):
        for J in itertools.combinations(range(1, n + 1), r):
            out.append(diagram_from_subset(J, n))
    out.sort(key=lambda d: (d.size, d.parts))
    return out


def corners(mu: ShiftedDiagram) -> Tuple[Box, ...]:
    """
    Removable boxes of mu, in lexicographic order.

    These are the boxes of mu not lying in every diagram obtained from mu by
    deleting one box.
    """
    out = []
    p = mu.parts
    for i in range(len(p)):
        last = i == len(p) - 1
        if last or p[i] - 1 > p[i + 1]:
            out.append((i + 1, mu.row_end(i + 1)))
    return tuple(out)


def interior(mu: ShiftedDiagram) -> FrozenSet[Box]:
    return mu.box_set - frozenset(corners(mu))


def remove_box(mu: ShiftedDiagram, box: Box) -> ShiftedDiagram:
    k, l = box
    if box not in corners(mu):
        raise DomainError(f"{box} is not a removable box of {mu}")
    parts = list(mu.parts)
    parts[k - 1] -= 1
    if parts[k - 1] == 0:
        parts.pop()
    return ShiftedDiagram(mu.ambient_n, tuple(parts))


class CoverCase(Enum):
    NEW_ROW = "NewRow"
    SAME_ROWS = "SameRows"


@dataclass(frozen=True)
class RegionData:
    """
    Boxes singled out by the box added in a cover lam < lam2.

    ``alpha`` is the arch, ``column`` the column through the new box,
    ``roof`` the rows of lam strictly above row ``star``.  The arch is left
    empty for a new-row cover.
    """

    star: int
    new_box: Box
    case: CoverCase
    alpha: FrozenSet[Box]
    column: FrozenSet[Box]
    roof: FrozenSet[Box]
    old_length: int

    @property
    def new_length(self) -> int:
        return self.new_box[1] - self.star + 1


def region_data(lam: ShiftedDiagram, lam2: ShiftedDiagram) -> RegionData:
    if not is_cover(lam, lam2):
        raise DomainError(f"{lam} -> {lam2} is not a cover")
    if lam2.rows > lam.rows:
        star = lam2.rows
        case = CoverCase.NEW_ROW
        old = 0
    else:
        star = next(
            k for k in range(1, lam.rows + 1) if lam.parts[k - 1] != lam2.parts[k - 1]
        )
        case = CoverCase.SAME_ROWS
        old = lam.parts[star - 1]
    right = lam2.row_end(star)
    new_box = (star, right)
    column = frozenset((k, right) for k in range(1, star + 1))
    roof = frozenset(b for b in lam.boxes if b[0] > star)
    if case is CoverCase.SAME_ROWS:
        alpha = frozenset(
            [(k, star) for k in range(1, star + 1)]
            + [(k, right) for k in range(1, star + 1)]
            + [(star, l) for l in range(star, right + 1)]
        )
    else:
        alpha = frozenset()
    return RegionData(star, new_box, case, alpha, column, roof, old)


def covers_above(lam: ShiftedDiagram) -> List[Tuple[ShiftedDiagram, RegionData]]:
    n = lam.ambient_n
    p = lam.parts
    out = []
    for i in range(len(p)):
        bigger = list(p)
        bigger[i] += 1
        if (i == 0 and bigger[0] <= n) or (i > 0 and bigger[i] < bigger[i - 1]):
            out.append(ShiftedDiagram(n, tuple(bigger)))
    if not p or p[-1] >= 2:
        out.append(ShiftedDiagram(n, p + (1,)))
    return [(lam2, region_data(lam, lam2)) for lam2 in out]


def covers_below(lam: ShiftedDiagram) -> List[ShiftedDiagram]:
    return [remove_box(lam, b) for b in corners(lam)]

