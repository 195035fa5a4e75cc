import copy
import random
from fractions import Fraction

import pytest

from lagcell.cells import complex_cell, mixed_cell, real_cell
from lagcell.chain import build, real_subcomplex, stabilize, verify_ddzero
from lagcell.diagrams import ShiftedDiagram
from lagcell.errors import DomainError, ResourceError
from lagcell.incidence import degree
from lagcell.rowreduce import (
    Slot,
    check_membership,
    materialize,
    pattern_for,
    random_point,
    reduce_to_pivots,
    transition_apply,
)
from lagcell.scalars import GaussianRational as G


def D(n, *parts):
    return ShiftedDiagram(n, parts)


def _entry(cc, c, c2):
    d = c2.dim
    return cc.entry(d, cc.cells_in(d - 1).index(c), cc.cells_in(d).index(c2))


def test_cp1_boundary():
    cc = build(1, "mixed")
    assert cc.matrix(1).tolist() == [[0]]
    assert cc.matrix(2).tolist() == [[-1, 1]]
    assert verify_ddzero(cc) == []


def test_real_rank3_boundary():
    cc = build(3, "real")
    two, three, two_one, three_one = (real_cell(D(3, *p)) for p in [(2,), (3,), (2, 1), (3, 1)])
    assert _entry(cc, two, three) == -2
    assert _entry(cc, two, two_one) == 2
    assert _entry(cc, three, three_one) == 2
    assert _entry(cc, two_one, three_one) == 2


def test_complex_boundaries_vanish():
    cc = build(3, "complex")
    assert all(not e for e in cc.boundary.values())
    assert sorted(cc.cells) == [0, 2, 4, 6, 8, 10, 12]


@pytest.mark.parametrize("space", ["real", "complex"])
@pytest.mark.parametrize("n", range(1, 9))
def test_ddzero_real_complex(space, n):
    assert verify_ddzero(build(n, space)) == []


@pytest.mark.parametrize("n", range(1, 4))
def test_ddzero_mixed_small(n):
    assert verify_ddzero(build(n, "mixed")) == []


def test_ddzero_detects_sign_flip():
    cc = build(3, "real")
    bad = copy.deepcopy(cc)
    bad.boundary[4] = {k: -v if k[0] == 0 else v for k, v in bad.boundary[4].items()}
    assert verify_ddzero(bad)


@pytest.mark.parametrize("n", range(1, 6))
def test_real_subcomplex_equals_real_complex(n):
    assert real_subcomplex(build(n, "mixed")).same_as(build(n, "real"))


def test_real_subcomplex_needs_mixed():
    with pytest.raises(DomainError):
        real_subcomplex(build(2, "real"))


@pytest.mark.parametrize("space", ["real", "complex", "mixed"])
@pytest.mark.parametrize("n", range(1, 5))
def test_euler_characteristic(space, n):
    cc = build(n, space)
    want = sum((-1) ** c.lam.size for c in cc.all_cells()) if space == "real" else 2 ** n
    assert cc.euler_characteristic() == want


def test_entries_bounded():
    for n in range(1, 5):
        for _, _, _, v in build(n, "mixed").nonzero_entries():
            assert v in (-2, -1, 1, 2)


def test_build_errors():
    with pytest.raises(ResourceError):
        build(6, "mixed")
    with pytest.raises(DomainError):
        build(2, "octonionic")


def test_stabilize_examples():
    c = real_cell(D(1, 1))
    assert stabilize(c, 2).n == 3 and stabilize(c, 2).lam.parts == (1,)
    phi = complex_cell(ShiftedDiagram.empty(2))
    assert stabilize(phi, 1).dim == 0
    for a, b in [(D(2, 1), D(2, 2)), (D(2, 2), D(2, 2, 1))]:
        base = degree(real_cell(a), real_cell(b))
        assert degree(stabilize(real_cell(a), 2), stabilize(real_cell(b), 2)) == base


def test_frontier_limit_outside_nested_cells():
    """
    Points of the ([4,3,2], [3]) stratum accumulate on the ([4,3], [4])
    stratum although [4] is not contained in [3]: with t2 fixed, the double
    collar through [4,3,1] converges to a point whose [4,3] chart has a
    nonreal (1,4) coordinate.  The closed-form degrees never see this
    incidence, which is why d∘d of the mixed complex fails from rank 4 on.
    """
    n = 4
    lam, lam1, lam2, mu = D(n, 4, 3), D(n, 4, 3, 1), D(n, 4, 3, 2), D(n, 3)
    z = random_point(lam, mu, random.Random(5))
    p = pattern_for(lam)
    limits = []
    for k in (4, 8):
        t1 = Fraction(1, 10 ** k)
        w = transition_apply(lam1, lam2, transition_apply(lam, lam1, z, t1), Fraction(7, 10))
        assert check_membership(lam2, mu, w)
        M = materialize(pattern_for(lam2), w, one=G(1), zero=G(0))
        R = reduce_to_pivots(M, p.pivots, one=G(1))
        off = [R[r][c] for r, row in enumerate(p.table) for c, e in enumerate(row) if e.slot is Slot.ZERO]
        assert max(abs(x.re) + abs(x.im) for x in off) <= 10 * t1
        limits.append({e.box: R[r][c] for r, row in enumerate(p.table) for c, e in enumerate(row) if e.slot is Slot.INDEPENDENT})
    # the limit chart stabilizes and lies in the [4,3] + i[4] stratum
    assert limits[0] == limits[1]
    assert limits[1][(1, 4)].im != 0
    assert check_membership(lam, D(n, 4), limits[1])
