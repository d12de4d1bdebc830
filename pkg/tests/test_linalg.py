from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stringyfano import linalg
from stringyfano.errors import EmptyInput, ShapeMismatch, SingularMatrix, ZeroVector
from strategies import int_vectors, nonzero_vectors


def test_make_primitive_examples():
    assert linalg.make_primitive((2, 4, 6)) == (1, 2, 3)
    assert linalg.make_primitive((1, 0, 0)) == (1, 0, 0)
    assert linalg.make_primitive((-5, -6, -8)) == (-5, -6, -8)
    with pytest.raises(ZeroVector):
        linalg.make_primitive((0, 0, 0))


@given(nonzero_vectors(3), st.integers(1, 50))
def test_make_primitive_idempotent_and_scale_invariant(v, k):
    p = linalg.make_primitive(v)
    assert linalg.vector_gcd(p) == 1
    assert linalg.make_primitive(p) == p
    assert linalg.make_primitive(linalg.scale(k, v)) == p
    # same direction: v is a positive multiple of p
    g = linalg.vector_gcd(v)
    assert linalg.scale(g, p) == tuple(v)


def test_integer_det_examples():
    assert linalg.integer_det([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert linalg.integer_det([[-1, 1, 0], [-1, 0, 1], [-2, -1, -1]]) == -4
    assert linalg.integer_det([[1, 0], [0, 3]]) == 3
    with pytest.raises(ShapeMismatch):
        linalg.integer_det([[1, 2, 3], [4, 5, 6]])


def _cofactor_det(M):
    if len(M) == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * _cofactor_det([r[:j] + r[j + 1:] for r in M[1:]])
               for j in range(len(M)))


def _parity(perm):
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n), min_size=n, max_size=n),
    st.permutations(range(n)))))
def test_det_matches_cofactor_and_row_permutation_parity(data):
    M, perm = data
    d = linalg.integer_det(M)
    assert d == _cofactor_det(M)
    assert linalg.integer_det([M[i] for i in perm]) == _parity(perm) * d


def test_solve_linear_examples():
    cols = [(1, 0, 0), (0, 1, 0), (-1, -1, -2)]
    A = linalg.transpose(cols)
    assert linalg.solve_linear(A, (0, 0, -1)) == (Fraction(1, 2),) * 3
    I = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert linalg.solve_linear(I, (7, -2, 5)) == (7, -2, 5)
    assert linalg.solve_linear(I, (1, 1, 1)) == (1, 1, 1)
    with pytest.raises(SingularMatrix):
        linalg.solve_linear([[1, 2], [2, 4]], (1, 2))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(st.integers(-1000, 1000), min_size=n, max_size=n))))
def test_solve_linear_round_trip(data):
    A, x = data
    if linalg.integer_det(A) == 0:
        return
    b = [linalg.dot(row, x) for row in A]
    assert list(linalg.solve_linear(A, b)) == x


@given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=1, max_size=3))
def test_hnf_shape_and_kernel(A):
    H, U, r = linalg.hermite_normal_form(A)
    n = len(A[0])
    AU = [[sum(A[i][k] * U[k][j] for k in range(n)) for j in range(n)] for i in range(len(A))]
    assert AU == H
    assert abs(linalg.integer_det(U)) == 1
    assert r == linalg.rank(A)
    for v in linalg.integer_kernel(A):
        assert all(linalg.dot(row, v) == 0 for row in A)
    assert len(linalg.integer_kernel(A)) == n - r


def test_sublattice_basis_examples():
    B = linalg.sublattice_basis([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert len(B) == 2 and all(sum(b) == 0 for b in B)
    # same lattice as {(-1,1,0), (-1,0,1)}
    ref = linalg.lattice_basis([(-1, 1, 0), (-1, 0, 1)], 3)
    assert linalg.lattice_basis(B, 3) == ref
    assert linalg.sublattice_basis([(0, 0, 0), (2, 0, 0)]) == [(1, 0, 0)]
    (b,) = linalg.sublattice_basis([(1, 0, 0), (0, 1, 0)])
    assert b in ((-1, 1, 0), (1, -1, 0))
    with pytest.raises(EmptyInput):
        linalg.sublattice_basis([])


def _saturation_oracle(diffs, d):
    # all integer points of the rational span inside a box, as a lattice
    from itertools import product
    k = linalg.rank(diffs)
    pts = [p for p in product(range(-6, 7), repeat=d) if linalg.rank(list(diffs) + [p]) == k]
    return linalg.lattice_basis(pts, d)


@given(st.lists(int_vectors(3, -3, 3), min_size=2, max_size=4))
def test_sublattice_basis_is_saturated_difference_lattice(points):
    diffs = [linalg.sub(p, points[0]) for p in points[1:]]
    if not any(any(v) for v in diffs):
        assert linalg.sublattice_basis(points) == []
        return
    B = linalg.sublattice_basis(points)
    assert len(B) == linalg.rank(diffs)
    for v in diffs:
        assert all(c.denominator == 1 for c in linalg.coordinates(B, v))
    # B is already in HNF and spans the saturation
    assert linalg.lattice_basis(B, 3) == B
    if len(B) < 3 and max(abs(x) for b in B for x in b) <= 6:
        assert B == _saturation_oracle(diffs, 3)
    # when the differences already generate a saturated lattice, HNFs agree
    if _index_one(diffs, B):
        assert linalg.lattice_basis([v for v in diffs if any(v)], 3) == B


def test_sublattice_basis_saturates_a_non_saturated_difference_lattice():
    # the difference lattice of {0, (2,0,0)} is 2Z; the face lattice is Z
    assert linalg.lattice_basis([(2, 0, 0)], 3) == [(2, 0, 0)]
    assert linalg.sublattice_basis([(0, 0, 0), (2, 0, 0)]) == [(1, 0, 0)]


def _index_one(diffs, B):
    coords = [[int(c) for c in linalg.coordinates(B, v)] for v in diffs if any(v)]
    H = linalg.lattice_basis(coords, len(B))
    return len(H) == len(B) and abs(linalg.integer_det(H)) == 1


def test_coordinates_rejects_vectors_off_the_span():
    with pytest.raises(ValueError):
        linalg.coordinates([(1, 0, 0)], (0, 1, 0))
