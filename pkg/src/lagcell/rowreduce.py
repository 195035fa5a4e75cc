"""
Reduced row echelon charts of Schubert cells and the exact Jacobian oracle.

Matrices are n x 2n with columns ordered q_1..q_n, p_n..p_1.  Rows are the
vectors v_a (pivot at e_{i_a}) followed by w_{|J|}, ..., w_1 (pivot at
f_{j_b}).  The entry z_{k,l} of a box (k, l) sits in row w_k, at column
q_{j_l} when l <= |J| and at column p_{i_{n+1-l}} otherwise; every other
non-pivot entry is either zero or forced by isotropy.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .diagrams import (
    Box,
    CoverCase,
    ShiftedDiagram,
    complement,
    corners,
    diagram_from_subset,
    interior,
    is_cover,
    leq,
    region_data,
    subset_from_diagram,
)
from .errors import DomainError, IntegrityError
from .linalg import det, rref
from .scalars import GaussianRational, I, Jet, as_gaussian, is_zero


class Slot(Enum):
    PIVOT = "pivot"
    ZERO = "zero"
    INDEPENDENT = "independent"
    DEPENDENT = "dependent"


@dataclass(frozen=True)
class Entry:
    slot: Slot
    box: Optional[Box] = None
    sign: int = 1


@dataclass(frozen=True)
class RrefPattern:
    n: int
    J: Tuple[int, ...]
    I: Tuple[int, ...]
    pivots: Tuple[int, ...]  # pivot column of each row
    table: Tuple[Tuple[Entry, ...], ...]

    @property
    def diagram(self) -> ShiftedDiagram:
        return diagram_from_subset(self.J, self.n)

    def independent_slots(self) -> Dict[Box, Tuple[int, int]]:
        return {
            e.box: (r, c)
            for r, row in enumerate(self.table)
            for c, e in enumerate(row)
            if e.slot is Slot.INDEPENDENT
        }


def q_col(n: int, j: int) -> int:
    return j - 1


def p_col(n: int, k: int) -> int:
    return 2 * n - k


def pattern(J: Sequence[int], n: int) -> RrefPattern:
    lam = diagram_from_subset(J, n)  # validates J
    J = subset_from_diagram(lam)
    Ic = complement(lam)
    nJ = len(J)
    table = [[Entry(Slot.ZERO)] * (2 * n) for _ in range(n)]
    pivots = []
    for a, ia in enumerate(Ic, start=1):
        row = a - 1
        table[row][q_col(n, ia)] = Entry(Slot.PIVOT)
        pivots.append(q_col(n, ia))
        for k, jk in enumerate(J, start=1):
            if jk < ia:
                # r_{a j_k} = -p_{k i_a}
                table[row][q_col(n, jk)] = Entry(Slot.DEPENDENT, (k, n + 1 - a), -1)
    for k in range(nJ, 0, -1):
        row = n - k
        jk = J[k - 1]
        table[row][p_col(n, jk)] = Entry(Slot.PIVOT)
        pivots.append(p_col(n, jk))
        for m, jm in enumerate(J, start=1):
            if m >= k:
                table[row][q_col(n, jm)] = Entry(Slot.INDEPENDENT, (k, m))
            else:
                # q_{k j_m} = q_{m j_k}
                table[row][q_col(n, jm)] = Entry(Slot.DEPENDENT, (m, k), 1)
        for a, ia in enumerate(Ic, start=1):
            if ia > jk:
                table[row][p_col(n, ia)] = Entry(Slot.INDEPENDENT, (k, n + 1 - a))
    return RrefPattern(n, J, Ic, tuple(pivots), tuple(tuple(r) for r in table))


def pattern_for(lam: ShiftedDiagram) -> RrefPattern:
    return pattern(subset_from_diagram(lam), lam.ambient_n)


def materialize(p: RrefPattern, values: Dict[Box, object], one=1, zero=0) -> List[list]:
    """Fill the pattern with values (any scalar type) on the boxes of its diagram."""
    missing = [b for b in p.diagram.boxes if b not in values]
    if missing:
        raise DomainError(f"no value for boxes {missing}")
    M = []
    for row in p.table:
        out = []
        for e in row:
            if e.slot is Slot.PIVOT:
                out.append(one)
            elif e.slot is Slot.ZERO:
                out.append(zero)
            elif e.sign == 1:
                out.append(values[e.box])
            else:
                out.append(-values[e.box])
        M.append(out)
    return M


def symplectic_pairing(u: Sequence, v: Sequence, n: int):
    """omega(u, v) = sum_j q_j(u) p_j(v) - p_j(u) q_j(v)."""
    acc = 0
    for j in range(1, n + 1):
        qj, pj = q_col(n, j), p_col(n, j)
        acc = acc + u[qj] * v[pj] - u[pj] * v[qj]
    return acc


def is_lagrangian(M: Sequence[Sequence]) -> bool:
    n = len(M)
    if any(len(row) != 2 * n for row in M):
        raise DomainError("expected an n x 2n matrix")
    _, piv = rref(M)
    if len(piv) < n:
        raise DomainError("matrix does not have full row rank")
    return all(
        is_zero(symplectic_pairing(M[a], M[b], n))
        for a in range(n)
        for b in range(a + 1, n)
    )


def read_chart(M: Sequence[Sequence], lam: ShiftedDiagram) -> Dict[Box, object]:
    """
    Coordinates of a matrix already in the reduced form of lam.  Pivot, zero
    and isotropy-forced entries are checked on the way.
    """
    p = pattern_for(lam)
    z = {}
    for r, row in enumerate(p.table):
        for c, e in enumerate(row):
            if e.slot is Slot.INDEPENDENT:
                z[e.box] = M[r][c]
    for r, row in enumerate(p.table):
        for c, e in enumerate(row):
            x = M[r][c]
            if e.slot is Slot.PIVOT:
                ok = x == 1
            elif e.slot is Slot.ZERO:
                ok = _identically_zero(x)
            elif e.slot is Slot.DEPENDENT:
                ok = x == (z[e.box] if e.sign == 1 else -z[e.box])
            else:
                ok = True
            if not ok:
                raise IntegrityError(f"entry ({r},{c}) breaks the {lam} pattern")
    return z


def _identically_zero(x) -> bool:
    return x.is_identically_zero() if isinstance(x, Jet) else is_zero(x)


def reduce_to_pivots(M: Sequence[Sequence], pivots: Sequence[int], one=Fraction(1)) -> List[list]:
    """
    Row-reduce M so that row r has a 1 in column pivots[r] and every other
    row has a 0 there (Gauss-Jordan with prescribed pivot columns).
    """
    A = [list(row) for row in M]
    n = len(A)
    for r, c in enumerate(pivots):
        p = next((i for i in range(r, n) if not is_zero(A[i][c])), None)
        if p is None:
            raise DomainError("degenerate sample: pivot block is singular")
        A[r], A[p] = A[p], A[r]
        inv = one / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(n):
            if i != r and not _identically_zero(A[i][c]):
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
    return A


# ---------------------------------------------------------------- transitions


def _check_cover(lam, lam2, t):
    if not is_cover(lam, lam2):
        raise DomainError(f"{lam} -> {lam2} is not a cover")
    if is_zero(t):
        raise DomainError("transition needs t != 0")


def transition_apply(lam: ShiftedDiagram, lam2: ShiftedDiagram, z: Dict[Box, object], t):
    """
    Closed-form chart transition (z, t) -> z' from the cell of lam into the
    cell of lam2.  Works for any scalar type closed under + - * and 1/t.
    """
    _check_cover(lam, lam2, t)
    rd = region_data(lam, lam2)
    s = rd.star
    u = 1 / t if not isinstance(t, int) else Fraction(1, t)
    u2 = u * u
    out = {}
    if rd.case is CoverCase.NEW_ROW:
        for (k, l) in lam2.boxes:
            if (k, l) == (s, s):
                out[(k, l)] = u
            elif l < s:
                out[(k, l)] = z[(k, l)] + u * z[(k, s)] * z[(l, s)]
            elif l == s:
                out[(k, l)] = -(u * z[(k, l)])
            else:
                out[(k, l)] = z[(k, l)]
        return out
    R = rd.new_box[1]
    for (k, l) in lam2.boxes:
        if k > s or l > R:
            out[(k, l)] = z[(k, l)]
        elif (k, l) == (s, R):
            out[(k, l)] = u
        elif k == l == s:
            out[(k, l)] = u2 * z[(k, l)]
        elif k < s and l == R:
            out[(k, l)] = -(u * z[(k, l)])
        elif k == s:  # s < l < R
            out[(k, l)] = u * z[(k, l)]
        elif l == s:  # k < s
            out[(k, l)] = u * z[(k, l)] - u2 * z[(s, s)] * z[(k, R)]
        elif l > s:  # k < s < l < R
            out[(k, l)] = z[(k, l)] - u * z[(s, l)] * z[(k, R)]
        else:  # k <= l < s
            out[(k, l)] = (
                z[(k, l)]
                - u * z[(k, s)] * z[(l, R)]
                - u * z[(l, s)] * z[(k, R)]
                + u2 * z[(s, s)] * z[(k, R)] * z[(l, R)]
            )
    return out


def collar_matrix(lam: ShiftedDiagram, lam2: ShiftedDiagram, z: Dict[Box, object], t, one=1, zero=0):
    """
    The matrix of lam's chart at z with the rows deformed by t so that its
    row space moves into the cell of lam2 (still unreduced).
    """
    _check_cover(lam, lam2, t)
    n = lam.ambient_n
    M = materialize(pattern_for(lam), z, one=one, zero=zero)
    J = subset_from_diagram(lam)
    J2 = subset_from_diagram(lam2)
    Ic = complement(lam)
    rd = region_data(lam, lam2)
    if rd.case is CoverCase.NEW_ROW:
        # v_{|I|} + t f_n; the last I-row has pivot e_n
        row = len(Ic) - 1
        M[row][p_col(n, n)] = M[row][p_col(n, n)] + t
        return M
    s = rd.star
    j_old, j_new = J[s - 1], J2[s - 1]
    a = Ic.index(j_new)  # v_a has its pivot at e_{j_new}
    M[a][q_col(n, j_old)] = M[a][q_col(n, j_old)] - t
    w_row = n - s
    M[w_row][p_col(n, j_new)] = M[w_row][p_col(n, j_new)] + t
    return M


def transition_rref(lam: ShiftedDiagram, lam2: ShiftedDiagram, z: Dict[Box, object], t, one=Fraction(1), zero=0):
    """Transition computed by honest row reduction of the deformed matrix."""
    M = collar_matrix(lam, lam2, z, t, one=one, zero=zero)
    R = reduce_to_pivots(M, pattern_for(lam2).pivots, one=one)
    return read_chart(R, lam2)


# ---------------------------------------------------------------- the oracle


def real_coordinates(lam: ShiftedDiagram, mu: ShiftedDiagram) -> List[Tuple[Box, str]]:
    """x for every box of lam, y for boxes of mu; lexicographic with x < y."""
    m = mu.box_set
    out = []
    for b in lam.boxes:
        out.append((b, "x"))
        if b in m:
            out.append((b, "y"))
    return out


def check_membership(lam, mu, z: Dict[Box, GaussianRational], eps: Optional[Dict[Box, int]] = None):
    """Is z a point of the lam + i mu stratum (and of the eps component)?"""
    cs = set(corners(mu))
    for b in lam.boxes:
        im = as_gaussian(z[b]).im
        if b in cs:
            if not im:
                return False
            if eps is not None and (im > 0) != (eps[b] > 0):
                return False
        elif b not in mu.box_set and im:
            return False
    return True


@dataclass
class OracleResult:
    determinant: Fraction
    image: Dict[Box, GaussianRational]


def jacobian_oracle(
    lam: ShiftedDiagram,
    lam2: ShiftedDiagram,
    mu: ShiftedDiagram,
    z: Dict[Box, object],
    t,
    route: str = "formula",
) -> Fraction:
    return jacobian_oracle_full(lam, lam2, mu, z, t, route).determinant


def jacobian_oracle_full(lam, lam2, mu, z, t, route="formula") -> OracleResult:
    """
    Exact real Jacobian determinant of the transition restricted to
    lam + i mu, in the coordinates x (all boxes) and y (boxes of mu) ordered
    lexicographically, with t appended last on the source side.

    ``route`` selects the closed-form transition ("formula") or full row
    reduction of the deformed matrix ("rref").
    """
    if not is_cover(lam, lam2):
        raise DomainError(f"{lam} -> {lam2} is not a cover")
    if not leq(mu, lam):
        raise DomainError(f"mu={mu} is not contained in lambda={lam}")
    t = Fraction(t)
    if not t:
        raise DomainError("transition needs t != 0")
    z = {b: as_gaussian(v) for b, v in z.items()}
    if not check_membership(lam, mu, z):
        raise DomainError("sample point is not in the lam + i mu stratum")
    src = real_coordinates(lam, mu)
    nv = len(src) + 1
    index = {bc: i for i, bc in enumerate(src)}
    zj = {}
    for b in lam.boxes:
        p = [GaussianRational()] * nv
        p[index[(b, "x")]] = GaussianRational(1)
        if (b, "y") in index:
            p[index[(b, "y")]] = I
        zj[b] = Jet(z[b], p)
    tj = Jet.variable(t, nv - 1, nv)
    one = Jet.constant(1, nv)
    if route == "formula":
        out = transition_apply(lam, lam2, zj, tj)
    elif route == "rref":
        out = transition_rref(lam, lam2, zj, tj, one=one, zero=Jet.constant(0, nv))
    else:
        raise DomainError(f"unknown route {route!r}")
    rows = []
    for b, part in real_coordinates(lam2, mu):
        jet = out[b]
        rows.append([p.re if part == "x" else p.im for p in jet.partials])
    image = {b: j.value for b, j in out.items()}
    return OracleResult(det(rows), image)


def random_point(
    lam: ShiftedDiagram,
    mu: ShiftedDiagram,
    rng: random.Random,
    eps: Optional[Dict[Box, int]] = None,
) -> Dict[Box, GaussianRational]:
    """
    A random rational point of the lam + i mu stratum: numerators and
    denominators drawn from [1, 7] with random signs.
    """

    def r():
        return Fraction(rng.choice((1, -1)) * rng.randint(1, 7), rng.randint(1, 7))

    cs = corners(mu)
    inner = interior(mu)
    z = {}
    for b in lam.boxes:
        if b in cs:
            s = eps[b] if eps is not None else rng.choice((1, -1))
            z[b] = GaussianRational(r(), s * abs(r()))
        elif b in inner:
            z[b] = GaussianRational(r(), r())
        else:
            z[b] = GaussianRational(r(), 0)
    return z


def random_t(rng: random.Random, sign: Optional[int] = None) -> Fraction:
    t = Fraction(rng.randint(1, 7), rng.randint(1, 7))
    s = sign if sign is not None else rng.choice((1, -1))
    return s * t


def stabilize_matrix(M: Sequence[Sequence], m: int, one=1, zero=0) -> List[list]:
    """
    Matrix of span(e_1..e_m) + (image of the row space under e_i -> e_{i+m},
    f_i -> f_{i+m}), in reduced form.
    """
    n = len(M)
    N = n + m
    out = []
    for i in range(m):
        row = [zero] * (2 * N)
        row[i] = one
        out.append(row)
    for row in M:
        new = [zero] * (2 * N)
        for c, x in enumerate(row):
            new[c + m] = x  # q_j -> q_{j+m}; p_k (col 2n-k) -> p_{k+m} (col 2N-k-m)
        out.append(new)
    return out
