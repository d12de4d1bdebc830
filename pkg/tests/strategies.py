"""Hypothesis strategies for lattice polytopes."""

import functools
import itertools

from hypothesis import assume
from hypothesis import strategies as st

from stringyfano.errors import InvalidPolytope, NotFullDimensional
from stringyfano.polytope import LatticePolytope, convex_hull

CUBE3 = [p for p in itertools.product((-1, 0, 1), repeat=3) if any(p)]
SQUARE2 = [p for p in itertools.product((-1, 0, 1), repeat=2) if any(p)]


def int_vectors(dim, lo=-10, hi=10):
    return st.tuples(*[st.integers(lo, hi)] * dim)


def nonzero_vectors(dim, lo=-10, hi=10):
    return int_vectors(dim, lo, hi).filter(any)


@st.composite
def unimodular(draw, dim=3, steps=4):
    """Product of random elementary matrices and sign flips."""
    M = [[int(i == j) for j in range(dim)] for i in range(dim)]
    for _ in range(draw(st.integers(0, steps))):
        i, j = draw(st.permutations(range(dim)))[:2]
        k = draw(st.sampled_from((-1, 1)))
        for row in M:
            row[j] += k * row[i]
    if draw(st.booleans()):
        s = draw(st.integers(0, dim - 1))
        for row in M:
            row[s] = -row[s]
    return M


def apply(M, P: LatticePolytope) -> LatticePolytope:
    d = len(M)
    return LatticePolytope(tuple(tuple(sum(M[i][j] * v[j] for j in range(d)) for i in range(d))
                                 for v in P.vertices))


@st.composite
def polytopes(draw, dim=3, lo=-2, hi=2, max_points=8):
    pts = draw(st.lists(int_vectors(dim, lo, hi), min_size=dim + 1, max_size=max_points, unique=True))
    try:
        return convex_hull(pts)
    except (NotFullDimensional, InvalidPolytope):
        assume(False)


@st.composite
def origin_interior_polytopes(draw, dim=3, lo=-2, hi=2, max_points=8):
    P = draw(polytopes(dim, lo, hi, max_points))
    assume(P.origin_interior)
    return P


@st.composite
def canonical_fano(draw, dim=3):
    """Canonical Fano polytopes: hulls of points of {-1,0,1}^d (always
    canonical once 0 is interior) or weighted simplices, in random lattice
    coordinates."""
    if dim == 3 and draw(st.booleans()):
        P = draw(st.sampled_from(_weighted_simplices()))
    else:
        pool = CUBE3 if dim == 3 else SQUARE2
        pts = draw(st.lists(st.sampled_from(pool), min_size=dim + 1, max_size=10, unique=True))
        if draw(st.booleans()):
            # centrally symmetric hull: 0 is interior once full-dimensional
            pts = list(set(pts) | {tuple(-x for x in p) for p in pts})
        try:
            P = convex_hull(pts)
        except (NotFullDimensional, InvalidPolytope):
            assume(False)
        assume(P.origin_interior)
    return apply(draw(unimodular(dim)), P)


@functools.lru_cache(maxsize=None)
def _weighted_simplices():
    from stringyfano.samples import canonical_weighted_simplices
    return tuple(canonical_weighted_simplices(12))
