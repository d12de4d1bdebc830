from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from stringyfano import linalg
from stringyfano.errors import (NotCanonicalFano, NotSimplicial, OriginNotInterior,
                                UnsupportedDimension)
from stringyfano.fan import (Cone, box_points, box_points_bruteforce, kappa,
                             simplicial_subdivision, spanning_fan, unimodular_triangulation)
from stringyfano.polytope import LatticePolytope, dual_polytope, lattice_points
from stringyfano.samples import DELTA_1, DELTA_2, DELTA_3, P2_POLYGON
from strategies import canonical_fano, int_vectors

E1, E2, E3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
# pyramid over a square: canonical Fano with one quadrilateral facet
SQUARE_PYRAMID = LatticePolytope(((1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1), (0, 0, -1)))


def kappa_oracle(P, n):
    # support function of the dual polytope
    return min(linalg.dot(y, n) for y in dual_polytope(P).vertices)


def test_spanning_fan_examples():
    assert spanning_fan(DELTA_1).counts() == [1, 4, 6, 4]
    fan2 = spanning_fan(DELTA_2)
    assert len(fan2.maximal) == 4
    big = Cone((E1, E2, (-1, -1, -2)))
    assert big in fan2.maximal and big.volume == 2
    fanp = spanning_fan(P2_POLYGON)
    assert len(fanp.maximal) == 3 and all(c.volume == 1 for c in fanp.maximal)
    with pytest.raises(OriginNotInterior):
        spanning_fan(LatticePolytope(((0, 0), (1, 0), (0, 1))))


@pytest.mark.parametrize("strategy", ["vertices_only", "all_boundary_points"])
def test_subdivision_of_simplex_is_the_fan(strategy):
    sub = simplicial_subdivision(spanning_fan(DELTA_1), DELTA_1, strategy)
    assert sub.counts() == [1, 4, 6, 4]
    assert set(sub.cones) == set(spanning_fan(DELTA_1).cones)


def test_quadrilateral_facet_subdivision():
    P = SQUARE_PYRAMID
    fan = spanning_fan(P)
    assert not fan.is_simplicial
    coarse = simplicial_subdivision(fan, P, "vertices_only")
    assert coarse.is_simplicial
    # 4 triangles + the square split into 2
    assert len(coarse.maximal) == 6 and len(coarse.rays) == 5
    fine = simplicial_subdivision(fan, P, "all_boundary_points")
    r = len(fine.rays)
    assert r == len(lattice_points(P)[0])
    assert len(fine.maximal) == 2 * r - 4 and len(fine.of_dim(2)) == 3 * r - 6
    # facet triangles are unimodular, so cones over them have volume = distance of the facet
    for c in fine.maximal:
        m = next(m for m, cc, ids in P.facets if all(linalg.dot(m, g) + cc == 0 for g in c.generators))
        assert c.volume == next(cc for mm, cc, _ in P.facets if mm == m)


def test_subdivision_preconditions():
    fan = spanning_fan(DELTA_1)
    with pytest.raises(ValueError):
        simplicial_subdivision(fan, DELTA_1, "random")
    P4 = LatticePolytope((E1 + (0,), E2 + (0,), E3 + (0,), (0, 0, 0, 1), (-1, -1, -1, -1)))
    with pytest.raises(UnsupportedDimension):
        simplicial_subdivision(spanning_fan(P4), P4)
    fat = LatticePolytope(((2, 0, 0), (0, 2, 0), (0, 0, 2), (-2, -2, -2)))
    with pytest.raises(NotCanonicalFano):
        simplicial_subdivision(spanning_fan(fat), fat)


@given(canonical_fano(3))
def test_boundary_subdivision_counts(P):
    fan = simplicial_subdivision(spanning_fan(P), P, "all_boundary_points")
    r = len(fan.rays)
    assert r == len(lattice_points(P)[0])
    assert len(fan.maximal) == 2 * r - 4
    assert len(fan.of_dim(2)) == 3 * r - 6
    assert fan.is_simplicial
    # each cone has exactly one box point with integral kappa, namely -dim
    for c in fan.cones:
        integral = [b.kappa for b in box_points(c) if b.kappa.denominator == 1]
        assert integral == [-c.dim]
    # both subdivisions cover the same total volume v(P)
    assert sum(c.volume for c in fan.maximal) == P.volume == sum(
        c.volume for c in simplicial_subdivision(spanning_fan(P), P, "vertices_only").maximal)


@given(canonical_fano(3), st.sampled_from(["vertices_only", "all_boundary_points"]),
       int_vectors(3, -6, 6))
def test_kappa_matches_dual_support_function(P, strategy, n):
    fan = simplicial_subdivision(spanning_fan(P), P, strategy)
    assert kappa(fan, n) == kappa_oracle(P, n)
    for u in fan.rays:
        assert kappa(fan, u) == -1


def test_kappa_examples():
    fan = simplicial_subdivision(spanning_fan(DELTA_2), DELTA_2)
    assert kappa(fan, (0, 0, 0)) == 0
    assert kappa(fan, (0, 0, -1)) == F(-3, 2)
    with pytest.raises(NotSimplicial):
        kappa(spanning_fan(SQUARE_PYRAMID), (0, 0, 1))


def test_box_points_examples():
    (bp,) = box_points(Cone((E1, E2, E3)))
    assert bp.point == (1, 1, 1) and bp.kappa == -3
    got = {b.point: b.kappa for b in box_points(Cone((E1, E2, (-1, -1, -2))))}
    assert got == {(0, 0, -1): F(-3, 2), (0, 0, -2): -3}
    (bp,) = box_points(Cone(((1, 0, 0), (1, 1, 0))))
    assert bp.point == (2, 1, 0) and bp.kappa == -2
    with pytest.raises(NotSimplicial):
        box_points(Cone((E1, E2, (1, 1, 0))))


@st.composite
def simplicial_cones(draw):
    k = draw(st.integers(1, 3))
    gens = draw(st.lists(int_vectors(3, -4, 4).filter(any), min_size=k, max_size=k, unique=True))
    gens = [linalg.make_primitive(g) for g in gens]
    cone = Cone(tuple(gens))
    assume(cone.is_simplicial and len(set(gens)) == k)
    return cone


@given(simplicial_cones())
def test_box_points_match_bruteforce(cone):
    fast = box_points(cone)
    assert fast == box_points_bruteforce(cone)
    # the half-open parallelepiped holds exactly index-many lattice points
    assert len(fast) == cone.volume
    for b in fast:
        assert all(0 < x <= 1 for x in b.lam)
        assert b.kappa == -sum(b.lam)
        assert tuple(sum(l * g[i] for l, g in zip(b.lam, cone.generators)) for i in range(3)) == b.point
    assert any(b.point == tuple(map(sum, zip(*cone.generators))) and b.kappa == -cone.dim for b in fast)


@given(st.lists(int_vectors(2, -3, 3), min_size=3, max_size=9, unique=True))
def test_unimodular_triangulation(points):
    from stringyfano.errors import NotFullDimensional
    from stringyfano.polytope import convex_hull
    try:
        P = convex_hull(points)
    except NotFullDimensional:
        return
    b, i = lattice_points(P)
    pts = b + i
    tris = unimodular_triangulation(pts)
    # Pick: unimodular triangle count = normalized area
    assert len(tris) == P.volume
    used = {j for t in tris for j in t}
    assert used == set(range(len(pts)))
