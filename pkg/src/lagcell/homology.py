"""Smith normal form over the integers and cellular homology."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Sequence, Tuple

from .chain import ChainComplex, verify_ddzero
from .errors import DomainError, IntegrityError


def smith_normal_form(M: Sequence[Sequence[int]]) -> Tuple[List[int], int]:
    """
    Nonzero invariant factors d1 | d2 | ... of an integer matrix and its rank.

    Pivots are chosen with minimal absolute value; Python ints keep the
    arithmetic exact.
    """
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    diag: List[int] = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = A[i][j]
                if v and (best is None or abs(v) < abs(A[best[0]][best[1]])):
                    best = (i, j)
                    if abs(v) == 1:
                        break
            if best and abs(A[best[0]][best[1]]) == 1:
                break
        if best is None:
            break
        i, j = best
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    for row in A:
                        row[j] -= q * row[t]
                    if A[t][j]:
                        done = False
            if done:
                # the pivot must also divide the remaining block
                bad = next(
                    (
                        i
                        for i in range(t + 1, m)
                        for j in range(t + 1, n)
                        if A[i][j] % p
                    ),
                    None,
                )
                if bad is None:
                    break
                A[t] = [a + b for a, b in zip(A[t], A[bad])]
                continue
            # move the smallest remainder into the pivot position and repeat
            i, j = min(
                [(i, t) for i in range(t, m) if A[i][t]]
                + [(t, j) for j in range(t, n) if A[t][j]],
                key=lambda ij: abs(A[ij[0]][ij[1]]),
            )
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag, len(diag)


def rank_mod2(M: Sequence[Sequence[int]]) -> int:
    rows = []
    for row in M:
        bits = 0
        for j, v in enumerate(row):
            if v % 2:
                bits |= 1 << j
        if bits:
            rows.append(bits)
    r = 0
    while rows:
        pivot = rows.pop()
        if not pivot:
            continue
        r += 1
        low = pivot & -pivot
        rows = [x ^ pivot if x & low else x for x in rows]
        rows = [x for x in rows if x]
    return r


@dataclass
class HomologyResult:
    coefficients: str
    free_rank: Dict[int, int] = field(default_factory=dict)
    torsion: Dict[int, List[int]] = field(default_factory=dict)

    def group(self, d: int) -> Tuple[int, List[int]]:
        return self.free_rank.get(d, 0), self.torsion.get(d, [])

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * r for d, r in self.free_rank.items())

    def group_str(self, d: int) -> str:
        r, tors = self.group(d)
        base = "Z" if self.coefficients == "Z" else "Z_2"
        terms = []
        if r == 1:
            terms.append(base)
        elif r > 1:
            terms.append(f"{base}^{r}" if base == "Z" else f"({base})^{r}")
        terms.extend(f"Z_{f}" for f in tors)
        return " + ".join(terms) if terms else "0"

    def as_table(self) -> List[Tuple[int, int, List[int]]]:
        dims = sorted(self.free_rank)
        return [(d, self.free_rank[d], self.torsion.get(d, [])) for d in dims]


def homology(cc: ChainComplex, coefficients: str = "Z") -> HomologyResult:
    if coefficients not in ("Z", "Z2"):
        raise DomainError(f"unknown coefficients {coefficients!r}")
    bad = verify_ddzero(cc)
    if bad:
        d, r, c, v = bad[0]
        raise IntegrityError(f"boundary squares to nonzero: d={d} entry ({r},{c}) = {v}")
    res = HomologyResult(coefficients)
    ranks: Dict[int, int] = {}
    factors: Dict[int, List[int]] = {}
    for d in cc.dims():
        M = cc.matrix(d).tolist() if d > 0 else []
        if coefficients == "Z":
            diag, r = smith_normal_form(M) if M and M[0] else ([], 0)
            factors[d] = sorted(f for f in diag if f > 1)
        else:
            r = rank_mod2(M) if M else 0
        ranks[d] = r
    top = cc.top_dim
    for d in cc.dims():
        cycles = cc.rank(d) - ranks.get(d, 0)
        boundaries = ranks.get(d + 1, 0) if d + 1 <= top else 0
        res.free_rank[d] = cycles - boundaries
        res.torsion[d] = factors.get(d + 1, []) if coefficients == "Z" else []
    return res
