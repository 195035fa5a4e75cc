import itertools

import pytest

from lagcell.cells import SignAssignment, complex_cell, enumerate_mixed, mixed_cell, real_cell
from lagcell.diagrams import ShiftedDiagram, all_diagrams, corners, covers_above, leq, region_data
from lagcell.errors import DomainError
from lagcell.incidence import (
    SignedMonomial,
    degree,
    degree_mixed,
    degree_real,
    eps_transport,
    jacobian_complex,
    jacobian_mixed,
)


def D(n, *parts):
    return ShiftedDiagram(n, parts)


def test_signed_monomial():
    T = SignedMonomial(-1, -12)
    assert T.at_plus_one() == -1 and T.at_minus_one() == -1
    assert T(2) == -(2 ** -12)
    assert SignedMonomial(1, -9).at_minus_one() == -1
    with pytest.raises(DomainError):
        SignedMonomial(0, 1)
    with pytest.raises(DomainError):
        T(0)


def test_jacobian_complex_examples():
    # J = {1,2} -> {1,2,3} in rank 3
    assert jacobian_complex(D(3, 3, 2), D(3, 3, 2, 1)) == SignedMonomial(-1, -4)
    # J = {1,4,5} -> {1,3,5} in rank 5
    assert jacobian_complex(D(5, 5, 2, 1), D(5, 5, 3, 1)) == SignedMonomial(-1, -7)
    assert jacobian_complex(D(3), D(3, 1)) == SignedMonomial(-1, -2)
    with pytest.raises(DomainError):
        jacobian_complex(D(3, 1), D(3, 3))


def test_jacobian_mixed_examples():
    assert jacobian_mixed(D(4, 4, 2), D(4, 4, 3), D(4, 4, 2)) == SignedMonomial(-1, -12)
    assert jacobian_mixed(D(2, 1), D(2, 2), D(2, 1)) == SignedMonomial(-1, -6)
    with pytest.raises(DomainError):
        jacobian_mixed(D(2, 1), D(2, 2), D(2, 2))


@pytest.mark.parametrize("n", range(1, 7))
def test_jacobian_mixed_reduces_to_complex(n):
    empty = ShiftedDiagram.empty(n)
    for lam in all_diagrams(n):
        for lam2, _ in covers_above(lam):
            assert jacobian_mixed(lam, lam2, empty) == jacobian_complex(lam, lam2)


def test_degree_real_examples():
    assert degree_real(D(3, 2), D(3, 2, 1)) == 2
    assert degree_real(D(3, 2), D(3, 3)) == -2
    assert degree_real(D(3, 1), D(3, 2)) == 0
    assert degree_real(D(3, 3), D(3, 3, 1)) == 2
    assert degree_real(D(4, 4), D(4, 3, 2)) == 0
    with pytest.raises(DomainError):
        degree_real(D(3, 1), D(3, 3))


@pytest.mark.parametrize("n", range(1, 9))
def test_degree_real_is_jacobian_difference(n):
    for lam in all_diagrams(n):
        for lam2, _ in covers_above(lam):
            T = jacobian_complex(lam, lam2)
            d = degree_real(lam, lam2)
            assert d == T.at_plus_one() - T.at_minus_one()
            assert d in (-2, 0, 2)


def test_eps_transport_worked_example():
    lam, lam2, mu = D(4, 4, 2), D(4, 4, 3), D(4, 4, 2)
    rd = region_data(lam, lam2)
    eps = SignAssignment.for_diagram(mu, (1, 1))
    assert eps_transport(eps, rd, mu, 1).signs == (-1, 1)
    assert eps_transport(eps, rd, mu, -1).signs == (1, -1)
    empty = ShiftedDiagram.empty(4)
    none = SignAssignment((), ())
    assert eps_transport(none, rd, empty, 1) == eps_transport(none, rd, empty, -1) == none
    with pytest.raises(DomainError):
        eps_transport(eps, rd, D(4, 4), 1)
    with pytest.raises(DomainError):
        eps_transport(eps, rd, mu, 0)


def test_degree_mixed_worked_example():
    lam, lam2, mu = D(4, 4, 2), D(4, 4, 3), D(4, 4, 2)
    c = mixed_cell(lam, mu, (1, 1))
    assert degree(c, mixed_cell(lam2, mu, (-1, 1))) == -1
    assert degree(c, mixed_cell(lam2, mu, (1, -1))) == 1
    assert degree(c, mixed_cell(lam2, mu, (-1, -1))) == 0
    assert degree(c, mixed_cell(lam2, mu, (1, 1))) == 0


def test_face_degrees_cp1():
    base = mixed_cell(D(1, 1), D(1))
    assert degree(base, mixed_cell(D(1, 1), D(1, 1), (1,))) == -1
    assert degree(base, mixed_cell(D(1, 1), D(1, 1), (-1,))) == 1


def test_face_degree_example():
    lam = D(4, 4, 3)
    for e14, e22, e23, e14b in itertools.product((1, -1), repeat=4):
        c = mixed_cell(lam, D(4, 4, 1), (e14, e22))
        c2 = mixed_cell(lam, D(4, 4, 2), (e14b, e23))
        want = e23 if e14 == e14b else 0
        assert degree(c, c2) == want


def test_dispatch():
    assert degree(complex_cell(D(2, 1)), complex_cell(D(2, 2))) == 0
    assert degree(real_cell(D(3, 3)), real_cell(D(3, 3, 1))) == 2
    with pytest.raises(DomainError):
        degree(real_cell(D(2, 1)), complex_cell(D(2, 2)))
    with pytest.raises(DomainError):
        degree(real_cell(D(2, 1)), real_cell(D(3, 2)))
    with pytest.raises(DomainError):
        degree(real_cell(D(3, 1)), real_cell(D(3, 3)))
    with pytest.raises(DomainError):
        degree(complex_cell(D(3, 1)), complex_cell(D(3, 3)))


@pytest.mark.parametrize("n", range(1, 9))
def test_mixed_reduces_to_real(n):
    empty = ShiftedDiagram.empty(n)
    for lam in all_diagrams(n):
        for lam2, _ in covers_above(lam):
            a, b = mixed_cell(lam, empty), mixed_cell(lam2, empty)
            assert degree(a, b) == degree_real(lam, lam2)


def _pairs(n):
    by_dim = {}
    for c in enumerate_mixed(n):
        by_dim.setdefault(c.dim, []).append(c)
    for d in sorted(by_dim):
        for c in by_dim.get(d - 1, []):
            for c2 in by_dim[d]:
                yield c, c2


@pytest.mark.parametrize("n", range(1, 4))
def test_range_and_frontier_consistency(n):
    for c, c2 in _pairs(n):
        v = degree(c, c2)
        assert v in (-2, -1, 0, 1, 2)
        if v:
            assert leq(c.lam, c2.lam) and leq(c.mu, c2.mu)


@pytest.mark.parametrize("n", range(1, 5))
def test_eps_partition(n):
    for lam in all_diagrams(n):
        for lam2, rd in covers_above(lam):
            for mu in all_diagrams(n):
                if not leq(mu, lam):
                    continue
                T = jacobian_mixed(lam, lam2, mu)
                for signs in itertools.product((1, -1), repeat=len(corners(mu))):
                    c = mixed_cell(lam, mu, signs)
                    eps = c.eps
                    plus = eps_transport(eps, rd, mu, 1)
                    minus = eps_transport(eps, rd, mu, -1)
                    for signs2 in itertools.product((1, -1), repeat=len(corners(mu))):
                        c2 = mixed_cell(lam2, mu, signs2)
                        v = degree_mixed(c, c2)
                        if c2.eps not in (plus, minus):
                            assert v == 0
                        elif plus == minus:
                            assert v == T.at_plus_one() - T.at_minus_one()
