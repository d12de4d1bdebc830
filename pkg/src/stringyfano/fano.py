"""Classification of lattice polytopes with the origin in the interior."""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import NotFullDimensional, OriginNotInterior
from .polytope import (LatticePolytope, RationalPolytope, convex_hull,
                       dual_polytope, lattice_points)


@dataclass(frozen=True)
class ClassificationReport:
    is_canonical_fano: bool
    is_reflexive: bool
    is_almost_pseudoreflexive: bool
    is_pseudoreflexive: bool
    is_almost_reflexive: bool
    is_ldp_polygon: bool
    interior_point_count: int
    boundary_point_count: int

    def implications_hold(self) -> bool:
        return ((not self.is_reflexive or self.is_almost_reflexive)
                and (not self.is_almost_reflexive or self.is_almost_pseudoreflexive)
                and (not self.is_reflexive or self.is_canonical_fano)
                and (not self.is_pseudoreflexive or self.is_almost_pseudoreflexive))


def lattice_hull_of_dual(P: LatticePolytope | RationalPolytope) -> LatticePolytope | None:
    """``conv(P* ∩ M)``, or ``None`` when those points are not full-dimensional."""
    dual = dual_polytope(P)
    boundary, interior = lattice_points(dual)
    try:
        return convex_hull(boundary + interior)
    except NotFullDimensional:
        return None


def is_reflexive(P: LatticePolytope) -> bool:
    """Dual is a lattice polytope (``l == 1``)."""
    if not P.origin_interior:
        return False
    return dual_polytope(P).denominator_l == 1


def all_facets_at_distance_one(P: LatticePolytope) -> bool:
    """Second reflexivity route: every facet reads ``<m, x> = -1``."""
    return P.origin_interior and all(c == 1 for _, c, _ in P.facets)


def is_canonical_fano(P: LatticePolytope) -> bool:
    """The origin is the only interior lattice point."""
    if not P.origin_interior:
        return False
    _, interior = lattice_points(P)
    return interior == [tuple(0 for _ in range(P.dim))]


def is_ldp_polygon(P: LatticePolytope) -> bool:
    return (P.dim == 2 and P.origin_interior
            and all(linalg.vector_gcd(v) == 1 for v in P.vertices))


def classify(P: LatticePolytope) -> ClassificationReport:
    boundary, interior = lattice_points(P)
    origin = tuple(0 for _ in range(P.dim))
    if not P.origin_interior:
        return ClassificationReport(False, False, False, False, False, False,
                                    len(interior), len(boundary))
    canonical = interior == [origin]
    reflexive = is_reflexive(P)
    hull = lattice_hull_of_dual(P)
    almost_pseudo = hull is not None and hull.origin_interior
    pseudo = False
    almost_reflexive = False
    if almost_pseudo:
        almost_reflexive = is_reflexive(hull)
        back = lattice_hull_of_dual(hull)
        pseudo = back is not None and back == P
    return ClassificationReport(
        is_canonical_fano=canonical,
        is_reflexive=reflexive,
        is_almost_pseudoreflexive=almost_pseudo,
        is_pseudoreflexive=pseudo,
        is_almost_reflexive=almost_reflexive,
        is_ldp_polygon=is_ldp_polygon(P),
        interior_point_count=len(interior),
        boundary_point_count=len(boundary),
    )


def require_origin_interior(P: LatticePolytope) -> None:
    if not P.origin_interior:
        raise OriginNotInterior("the origin is not in the interior of the polytope")
