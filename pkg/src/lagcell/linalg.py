"""Exact dense linear algebra on lists of lists."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Sequence

from .scalars import is_zero


def bareiss_det_int(M: Sequence[Sequence[int]]) -> int:
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(map(int, row)) for row in M]
    if any(len(row) != n for row in A):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * A[n - 1][n - 1]


def det(M: Sequence[Sequence]) -> Fraction:
    """
    Exact determinant of a rational matrix.

    Each row is scaled by the lcm of its denominators, the integer matrix is
    handled by Bareiss elimination and the scale is divided back out.
    """
    scale = Fraction(1)
    rows = []
    for row in M:
        row = [Fraction(x) for x in row]
        d = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * d) for x in row])
        scale *= d
    return Fraction(bareiss_det_int(rows)) / scale


def rref(M: Sequence[Sequence], one=Fraction(1)):
    """
    Reduced row echelon form over any exact field-like scalar type.

    Returns (R, pivot_columns).  Pivot search uses the value-level zero test,
    so for jets the pivot pattern is the one at the evaluation point.
    """
    A = [list(row) for row in M]
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if not is_zero(A[i][c])), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = one / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(nrows):
            if i != r and not is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M: Sequence[Sequence]) -> int:
    if not M:
        return 0
    return len(rref(M)[1])


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> List[list]:
    Bt = list(zip(*B))
    out = []
    for row in A:
        out_row = []
        for col in Bt:
            acc = 0
            for a, b in zip(row, col):
                acc = acc + a * b
            out_row.append(acc)
        out.append(out_row)
    return out


def transpose(A: Sequence[Sequence]) -> List[list]:
    return [list(col) for col in zip(*A)]
