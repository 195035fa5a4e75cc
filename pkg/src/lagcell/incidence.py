"""
Closed-form Jacobian monomials and attaching-map degrees.

Every cover lam < lam2 comes with a chart-transition map whose Jacobian
determinant is a signed monomial sign * t**exponent in the collar coordinate
t.  Degrees of attaching maps are read off from its values at t = +1, -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cells import Cell, Kind, SignAssignment
from .diagrams import (
    CoverCase,
    RegionData,
    ShiftedDiagram,
    corners,
    is_cover,
    leq,
    region_data,
)
from .errors import DomainError


@dataclass(frozen=True)
class SignedMonomial:
    sign: int
    exponent: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign}")

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        if not t:
            raise DomainError("monomial evaluated at t = 0")
        return self.sign * t ** self.exponent

    def at_plus_one(self) -> int:
        return self.sign

    def at_minus_one(self) -> int:
        return self.sign * (-1 if self.exponent % 2 else 1)

    def __str__(self):
        return f"{'+' if self.sign > 0 else '-'}t^{self.exponent}"


def _cover_data(lam, lam2) -> RegionData:
    if not is_cover(lam, lam2):
        raise DomainError(f"{lam} -> {lam2} is not a cover")
    return region_data(lam, lam2)


def jacobian_complex(lam: ShiftedDiagram, lam2: ShiftedDiagram) -> SignedMonomial:
    rd = _cover_data(lam, lam2)
    c = len(rd.column)
    if rd.case is CoverCase.NEW_ROW:
        return SignedMonomial((-1) ** c, -c - 1)
    return SignedMonomial((-1) ** (c + len(rd.roof)), -len(rd.alpha) - 2)


def jacobian_mixed(
    lam: ShiftedDiagram, lam2: ShiftedDiagram, mu: ShiftedDiagram
) -> SignedMonomial:
    """Real Jacobian of the transition restricted to the lam + i mu stratum."""
    rd = _cover_data(lam, lam2)
    if not leq(mu, lam):
        raise DomainError(f"mu={mu} is not contained in lambda={lam}")
    m = mu.box_set
    c, cm = len(rd.column), len(rd.column & m)
    if rd.case is CoverCase.NEW_ROW:
        return SignedMonomial((-1) ** (c + cm), -c - cm - 1)
    r, rm = len(rd.roof), len(rd.roof & m)
    a, am = len(rd.alpha), len(rd.alpha & m)
    diag = 1 if (rd.star, rd.star) in m else 0
    return SignedMonomial((-1) ** (c + cm + r + rm), -a - am - diag - 2)


def degree_real(lam: ShiftedDiagram, lam2: ShiftedDiagram) -> int:
    if lam2.size != lam.size + 1:
        raise DomainError("real degrees are defined across a dimension gap of one")
    if not leq(lam, lam2):
        return 0
    rd = region_data(lam, lam2)
    star = rd.star
    if rd.case is CoverCase.NEW_ROW:
        return (-1) ** star * (1 - (-1) ** (star + 1))
    above = sum(lam2.parts[star:])
    return (-1) ** (star + above) * (1 - (-1) ** lam2.parts[star - 1])


def eps_transport(
    eps: SignAssignment, rd: RegionData, mu: ShiftedDiagram, branch: int
) -> SignAssignment:
    """
    Signs on the corners of mu after flowing along the collar with
    sign(t) = branch.  Corners in the column flip for t > 0; corners in the
    rest of the arch, other than the diagonal box of row star, flip for t < 0.
    """
    if eps.corners != corners(mu):
        raise DomainError("sign assignment does not live on the corners of mu")
    if branch not in (1, -1):
        raise DomainError("branch must be +1 or -1")
    arch = rd.alpha - rd.column - {(rd.star, rd.star)}
    out = []
    for box, s in zip(eps.corners, eps.signs):
        if box in rd.column:
            s = -branch * s
        elif box in arch:
            s = branch * s
        out.append(s)
    return SignAssignment(eps.corners, tuple(out))


def _mixed_parts(c: Cell):
    if c.kind is not Kind.MIXED:
        raise DomainError("expected a mixed cell")
    return c.lam, c.mu, c.eps


def degree_mixed(c: Cell, c2: Cell) -> int:
    """Degree of the attaching map of c2 onto c (dim c2 = dim c + 1)."""
    lam, mu, eps = _mixed_parts(c)
    lam2, mu2, eps2 = _mixed_parts(c2)
    if c2.dim != c.dim + 1:
        raise DomainError("mixed degrees are defined across a dimension gap of one")
    if not (leq(lam, lam2) and leq(mu, mu2)):
        return 0
    if mu == mu2:
        rd = region_data(lam, lam2)
        T = jacobian_mixed(lam, lam2, mu)
        deg = 0
        if eps2 == eps_transport(eps, rd, mu, 1):
            deg += T.at_plus_one()
        if eps2 == eps_transport(eps, rd, mu, -1):
            deg -= T.at_minus_one()
        return deg
    # lam == lam2 and mu < mu2
    (new,) = mu2.box_set - mu.box_set
    common = set(eps2.corners) & set(eps.corners)
    if any(eps2[b] != eps[b] for b in common):
        return 0
    return face_sign(lam, mu2, new) * eps2[new]


def face_sign(lam: ShiftedDiagram, mu2: ShiftedDiagram, box) -> int:
    """
    Orientation sign for the face y_box = 0 inside the lam + i mu2 stratum.

    The inward normal of the face is -y_box.  Moving y_box past the
    coordinates that follow it in the lexicographic order contributes one
    sign per real-only box of lam after ``box``; the paired (x, y)
    coordinates of mu2 boxes contribute evenly.
    """
    after = sum(1 for b in lam.boxes if b > box and b not in mu2.box_set)
    return -((-1) ** after)


def degree(c: Cell, c2: Cell) -> int:
    if c.kind is not c2.kind:
        raise DomainError(f"cannot compare {c.kind.value} and {c2.kind.value} cells")
    if c.n != c2.n:
        raise DomainError("cells live in different ranks")
    if c.kind is Kind.COMPLEX:
        # cells sit in even dimensions only
        if c2.lam.size != c.lam.size + 1:
            raise DomainError("complex degrees are defined for |lam2| = |lam| + 1")
        return 0
    if c2.dim != c.dim + 1:
        raise DomainError("degrees are defined across a dimension gap of one")
    if c.kind is Kind.REAL:
        return degree_real(c.lam, c2.lam)
    return degree_mixed(c, c2)
