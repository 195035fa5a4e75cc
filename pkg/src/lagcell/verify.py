"""
Verification checks that tie the closed-form formulas to the exact oracle
and to global consistency properties of the chain complexes.

Each check returns a CheckResult; ``counterexample`` holds the first
failure found, if any.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from .chain import ChainComplex, build, real_subcomplex, verify_ddzero
from .diagrams import all_diagrams, covers_above, leq
from .errors import IntegrityError
from .homology import homology
from .incidence import degree, jacobian_mixed
from .rowreduce import (
    is_lagrangian,
    jacobian_oracle,
    materialize,
    pattern,
    random_point,
    random_t,
    transition_apply,
)
from .scalars import GaussianRational

CHECKS = ("ddzero", "jacobian", "euler", "subdivision", "realembed", "lagrangian", "stabilize")


@dataclass
class CheckResult:
    name: str
    passed: bool
    lines: List[str] = field(default_factory=list)
    counterexample: Optional[str] = None

    def summary(self) -> str:
        return f"{self.name}: {'pass' if self.passed else 'FAIL'}"


def check_ddzero(n: int, space: str, max_n: Optional[int] = None, cc: Optional[ChainComplex] = None) -> CheckResult:
    cc = cc or build(n, space, max_n)
    bad = verify_ddzero(cc)
    res = CheckResult("ddzero", not bad)
    res.lines.append(f"{space} n={n}: {len(bad)} nonzero entries in d∘d")
    if bad:
        d, r, c, v = bad[0]
        res.counterexample = (
            f"(d_{d} d_{d + 1})[{cc.cells_in(d - 1)[r]}, {cc.cells_in(d + 1)[c]}] = {v}, expected 0"
        )
    return res


def check_jacobian(n: int, samples: int = 3, seed: int = 0, route: str = "formula") -> CheckResult:
    """
    For every cover and every mu inside the smaller diagram, the exact
    Jacobian at ``samples`` random points and two random t values must equal
    the closed-form monomial.
    """
    rng = random.Random(seed)
    res = CheckResult("jacobian", True)
    count = 0
    for lam in all_diagrams(n):
        for lam2, _ in covers_above(lam):
            for mu in all_diagrams(n):
                if not leq(mu, lam):
                    continue
                T = jacobian_mixed(lam, lam2, mu)
                res.lines.append(f"{lam} -> {lam2}, mu={mu}: {T}")
                for _ in range(samples):
                    z = random_point(lam, mu, rng)
                    for _ in range(2):
                        t = random_t(rng)
                        got = jacobian_oracle(lam, lam2, mu, z, t, route)
                        count += 1
                        if got != T(t):
                            res.passed = False
                            res.counterexample = res.counterexample or (
                                f"{lam} -> {lam2}, mu={mu}, t={t}: expected {T(t)}, got {got}"
                            )
    res.lines.append(f"{count} exact determinants compared")
    return res


def expected_euler(n: int, space: str) -> int:
    if space == "real":
        return sum((-1) ** lam.size for lam in all_diagrams(n))
    return 2 ** n


def check_euler(n: int, space: str, max_n: Optional[int] = None, cc: Optional[ChainComplex] = None) -> CheckResult:
    cc = cc or build(n, space, max_n)
    chi = cc.euler_characteristic()
    want = expected_euler(n, space)
    res = CheckResult("euler", chi == want)
    res.lines.append(f"{space} n={n}: cells give {chi}, expected {want}")
    if chi != want:
        res.counterexample = f"cell count Euler characteristic {chi} != {want}"
        return res
    try:
        h = homology(cc)
    except IntegrityError as exc:
        res.passed = False
        res.counterexample = f"homology unavailable: {exc}"
        return res
    hchi = h.euler_characteristic()
    res.lines.append(f"alternating sum of Betti numbers: {hchi}")
    if hchi != chi:
        res.passed = False
        res.counterexample = f"Betti numbers give {hchi}, cells give {chi}"
    return res


def _table(h) -> Dict[int, str]:
    return {d: h.group_str(d) for d, _, _ in h.as_table()}


def _side_by_side(tc: Dict[int, str], tm: Dict[int, Optional[str]]) -> List[str]:
    rows = [("d", "complex", "mixed")]
    rows += [(str(d), tc.get(d, "0"), tm.get(d) or "?") for d in sorted(set(tc) | set(tm))]
    widths = [max(len(r[i]) for r in rows) for i in range(3)]
    return ["  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip() for r in rows]


def check_subdivision(n: int, max_n: Optional[int] = None) -> CheckResult:
    """The mixed and complex structures must have the same homology."""
    res = CheckResult("subdivision", True)
    tc = _table(homology(build(n, "complex", max_n)))
    try:
        tm = _table(homology(build(n, "mixed", max_n)))
    except IntegrityError as exc:
        res.passed = False
        res.counterexample = f"mixed homology unavailable: {exc}"
        res.lines.extend(_side_by_side(tc, {}))
        return res
    res.lines.extend(_side_by_side(tc, tm))
    for d in sorted(set(tc) | set(tm)):
        a, b = tc.get(d, "0"), tm.get(d, "0")
        if a != b:
            res.passed = False
            res.counterexample = f"H_{d}: complex {a}, mixed {b}"
            break
    return res


def check_realembed(n: int, max_n: Optional[int] = None) -> CheckResult:
    sub = real_subcomplex(build(n, "mixed", max_n))
    real = build(n, "real", max_n)
    ok = sub.same_as(real)
    res = CheckResult("realembed", ok)
    res.lines.append(f"n={n}: mu = φ part of the mixed complex {'equals' if ok else 'differs from'} the real complex")
    if not ok:
        for d in sorted(real.boundary):
            a, b = real.boundary.get(d, {}), sub.boundary.get(d, {})
            for key in sorted(set(a) | set(b)):
                if a.get(key, 0) != b.get(key, 0):
                    r, c = key
                    res.counterexample = (
                        f"d_{d}[{real.cells_in(d - 1)[r]}, {real.cells_in(d)[c]}]: "
                        f"real {a.get(key, 0)}, mixed {b.get(key, 0)}"
                    )
                    return res
    return res


def check_lagrangian(n: int, samples: int = 3, seed: int = 0) -> CheckResult:
    """Random charts, and their images under every transition, are Lagrangian."""
    rng = random.Random(seed)
    one, zero = GaussianRational(1), GaussianRational(0)
    res = CheckResult("lagrangian", True)
    count = 0
    for r in range(n + 1):
        for J in itertools.combinations(range(1, n + 1), r):
            p = pattern(J, n)
            lam = p.diagram
            for _ in range(samples):
                z = random_point(lam, lam, rng)
                mats = [(lam, z)]
                for lam2, _ in covers_above(lam):
                    mats.append((lam2, transition_apply(lam, lam2, z, random_t(rng))))
                for target, values in mats:
                    M = materialize(pattern(target.subset(), n), values, one=one, zero=zero)
                    count += 1
                    if not is_lagrangian(M):
                        res.passed = False
                        res.counterexample = res.counterexample or f"chart of {target} at {values}"
    res.lines.append(f"n={n}: {count} matrices checked")
    return res


def check_stabilize(n: int, space: str, max_m: int = 2, max_n: Optional[int] = None) -> CheckResult:
    """Degrees between every pair of cells one dimension apart survive I_{n,m}."""
    cc = build(n, space, max_n)
    res = CheckResult("stabilize", True)
    count = 0
    for d in cc.dims():
        if d == 0:
            continue
        for c in cc.cells_in(d - 1):
            for c2 in cc.cells_in(d):
                base = degree(c, c2)
                for m in range(1, max_m + 1):
                    count += 1
                    got = degree(c.stabilize(m), c2.stabilize(m))
                    if got != base and res.passed:
                        res.passed = False
                        res.counterexample = f"[{c2} : {c}] = {base} at n={n}, {got} at n={n + m}"
    res.lines.append(f"{space} n={n}: {count} degrees compared for m <= {max_m}")
    return res


SPACES = ("real", "complex", "mixed")


def _merge(name: str, parts: List[CheckResult]) -> CheckResult:
    res = CheckResult(name, all(r.passed for r in parts))
    for r in parts:
        res.lines.extend(r.lines)
    res.counterexample = next((r.counterexample for r in parts if r.counterexample), None)
    return res


def run_checks(
    names,
    n: int,
    space: Optional[str] = None,
    samples: int = 3,
    seed: int = 0,
    max_n: Optional[int] = None,
) -> List[CheckResult]:
    """Run the named checks; space-dependent ones cover every space when ``space`` is None."""
    spaces = SPACES if space is None else (space,)

    def per_space(fn: Callable[[str], CheckResult]) -> Callable[[], CheckResult]:
        return lambda: _merge(fn(spaces[0]).name, [fn(s) for s in spaces])

    table: Dict[str, Callable[[], CheckResult]] = {
        "ddzero": per_space(lambda s: check_ddzero(n, s, max_n)),
        "jacobian": lambda: check_jacobian(n, samples, seed),
        "euler": per_space(lambda s: check_euler(n, s, max_n)),
        "subdivision": lambda: check_subdivision(n, max_n),
        "realembed": lambda: check_realembed(n, max_n),
        "lagrangian": lambda: check_lagrangian(n, samples, seed),
        "stabilize": per_space(lambda s: check_stabilize(n, s, max_n=max_n)),
    }
    return [table[name]() for name in names]
