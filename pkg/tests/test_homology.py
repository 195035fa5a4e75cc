import itertools
from functools import reduce
from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lagcell.chain import ChainComplex, build
from lagcell.cells import enumerate_real
from lagcell.errors import DomainError, IntegrityError
from lagcell.homology import homology, rank_mod2, smith_normal_form
from lagcell.linalg import bareiss_det_int


def _minor_gcd(M, k):
    m, n = len(M), len(M[0])
    g = 0
    for rows in itertools.combinations(range(m), k):
        for cols in itertools.combinations(range(n), k):
            g = gcd(g, bareiss_det_int([[M[i][j] for j in cols] for i in rows]))
    return g


def test_snf_examples():
    assert smith_normal_form([[2, 2]]) == ([2], 1)
    assert smith_normal_form([[-1], [1]]) == ([1], 1)
    assert smith_normal_form([[-2, 2]]) == ([2], 1)
    assert smith_normal_form([[0, 0], [0, 0]]) == ([], 0)
    assert smith_normal_form([[2, 4], [6, 8]]) == ([2, 4], 2)
    assert smith_normal_form([[2, 0], [0, 3]]) == ([1, 6], 2)


matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_invariant_factors_are_minor_gcd_quotients(M):
    diag, r = smith_normal_form(M)
    assert r == np.linalg.matrix_rank(np.array(M, dtype=float))
    assert all(d > 0 for d in diag)
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
    for k in range(1, r + 1):
        assert reduce(lambda x, y: x * y, diag[:k]) == _minor_gcd(M, k)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rank_mod2_brute_force(M):
    m, n = len(M), len(M[0])
    # rank over F2 = largest k with an odd k x k minor
    want = max(
        (k for k in range(1, min(m, n) + 1) if _minor_gcd([[v % 2 for v in row] for row in M], k) % 2),
        default=0,
    )
    assert rank_mod2(M) == want


def test_homology_cp1():
    h = homology(build(1, "mixed"))
    assert [h.group_str(d) for d in range(3)] == ["Z", "0", "Z"]


def test_homology_real_rank3():
    h = homology(build(3, "real"))
    assert [h.group_str(d) for d in range(7)] == ["Z", "Z", "Z_2", "Z_2", "0", "Z", "Z"]


def test_homology_complex_rank3():
    h = homology(build(3, "complex"))
    assert h.group_str(6) == "Z^2"
    assert [h.free_rank[d] for d in range(0, 13, 2)] == [1, 1, 1, 2, 1, 1, 1]
    assert all(h.free_rank[d] == 0 for d in range(1, 13, 2))


@pytest.mark.parametrize("n", range(1, 6))
def test_real_torsion_is_two_torsion(n):
    h = homology(build(n, "real"))
    assert all(f == 2 for tors in h.torsion.values() for f in tors)
    assert h.group_str(0) == "Z"
    assert h.euler_characteristic() == sum((-1) ** c.lam.size for c in enumerate_real(n))


@pytest.mark.parametrize("space", ["real", "complex"])
@pytest.mark.parametrize("n", range(1, 5))
def test_universal_coefficients(space, n):
    cc = build(n, space)
    hz, h2 = homology(cc), homology(cc, "Z2")
    for d in cc.dims():
        even = lambda fs: sum(1 for f in fs if f % 2 == 0)
        want = hz.free_rank[d] + even(hz.torsion[d]) + even(hz.torsion.get(d - 1, []))
        assert h2.free_rank[d] == want


@pytest.mark.parametrize("n", range(1, 4))
def test_mixed_homology_matches_complex(n):
    assert homology(build(n, "mixed")).as_table() == homology(build(n, "complex")).as_table()


def test_group_strings_z2():
    h = homology(build(3, "real"), "Z2")
    assert [h.group_str(d) for d in range(7)] == ["Z_2", "Z_2", "Z_2", "(Z_2)^2", "Z_2", "Z_2", "Z_2"]


def test_homology_rejects_bad_complex():
    cc = build(3, "real")
    cc.boundary[4] = {k: -v if k[0] == 0 else v for k, v in cc.boundary[4].items()}
    with pytest.raises(IntegrityError):
        homology(cc)
    with pytest.raises(DomainError):
        homology(build(1, "real"), "Q")


def test_mixed_rank4_is_not_a_complex():
    with pytest.raises(IntegrityError):
        homology(build(4, "mixed"))
