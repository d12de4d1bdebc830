"""Named example polytopes and the bundled sample of reflexive 3-polytopes."""

from __future__ import annotations

import itertools
import random
from importlib import resources

from .io import PolytopeRecord, parse_polytopes
from .polytope import LatticePolytope

_E3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))

# running examples: X = P^3, P(1,1,1,2), P(1,5,6,8)
DELTA_1 = LatticePolytope(_E3 + ((-1, -1, -1),))
DELTA_2 = LatticePolytope(_E3 + ((-1, -1, -2),))
DELTA_3 = LatticePolytope(_E3 + ((-5, -6, -8),))

P2_POLYGON = LatticePolytope(((1, 0), (0, 1), (-1, -1)))
LDP_EXAMPLE = LatticePolytope(((1, 0), (0, 1), (-1, -3)))


def weighted_simplex(a: int, b: int, c: int) -> LatticePolytope:
    """``conv(e1, e2, e3, -(a, b, c))``."""
    return LatticePolytope(_E3 + ((-a, -b, -c),))


def load_reflexive3_sample() -> list[PolytopeRecord]:
    """The bundled reflexive 3-polytopes (one block per polytope)."""
    text = resources.files("stringyfano").joinpath("data/reflexive3_sample.txt").read_text("utf-8")
    return parse_polytopes(text)


def canonical_weighted_simplices(bound: int = 12) -> list[LatticePolytope]:
    """Every canonical Fano simplex ``conv(e1, e2, e3, -(a, b, c))`` with
    ``1 <= a, b, c <= bound``."""
    from .fano import is_canonical_fano
    out = []
    for a, b, c in itertools.product(range(1, bound + 1), repeat=3):
        P = weighted_simplex(a, b, c)
        if is_canonical_fano(P):
            out.append(P)
    return out


def _random_unimodular(rng: random.Random, steps: int = 3) -> list[list[int]]:
    M = [[int(i == j) for j in range(3)] for i in range(3)]
    for _ in range(steps):
        i, j = rng.sample(range(3), 2)
        k = rng.choice((-1, 1))
        for row in M:
            row[j] += k * row[i]
    return M


def random_canonical_simplices(count: int = 500, bound: int = 12, seed: int = 0) -> list[LatticePolytope]:
    """At least ``count`` distinct canonical Fano simplices.

    Only a few hundred simplices ``conv(e1, e2, e3, -(a, b, c))`` with
    ``1 <= a, b, c <= bound`` are canonical, so the list holds all of them
    (in seeded random order) followed by seeded random ``GL(3, Z)`` images of
    them until ``count`` distinct vertex sets are reached. Images are
    lattice-equivalent, so every invariant is unchanged.
    """
    rng = random.Random(seed)
    base = canonical_weighted_simplices(bound)
    rng.shuffle(base)
    seen = {P.vertices for P in base}
    out = list(base)
    while len(out) < count:
        P = rng.choice(base)
        M = _random_unimodular(rng)
        Q = LatticePolytope(tuple(tuple(sum(M[i][j] * v[j] for j in range(3)) for i in range(3))
                                  for v in P.vertices))
        if Q.vertices not in seen:
            seen.add(Q.vertices)
            out.append(Q)
    return out
