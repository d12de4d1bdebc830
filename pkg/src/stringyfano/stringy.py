"""Stringy E-functions of toric Fano varieties.

All formulas involved depend on ``u`` and ``v`` only through ``t = uv``, so an
E-function is stored as a sparse map from rational exponents of ``t`` to
integer coefficients.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping

from . import linalg
from .errors import (InternalInconsistency, NotCanonicalFano, NotLDP,
                     UnsupportedDimension)
from .fan import box_points, kappa, simplicial_subdivision, spanning_fan
from .fano import is_ldp_polygon
from .polytope import LatticePolytope, face_lattice, lattice_points


@dataclass(frozen=True)
class StringyEFunction:
    dim_d: int
    terms: tuple[tuple[Fraction, int], ...]

    def __post_init__(self):
        items = sorted((Fraction(a), int(c)) for a, c in dict(self.terms).items() if c != 0)
        object.__setattr__(self, "terms", tuple(items))

    @classmethod
    def from_mapping(cls, d: int, terms: Mapping) -> "StringyEFunction":
        return cls(d, tuple(terms.items()))

    def coefficient(self, alpha) -> int:
        return dict(self.terms).get(Fraction(alpha), 0)

    @property
    def gorenstein_q(self) -> int:
        return linalg.common_denominator(a for a, _ in self.terms)

    def symmetry_holds(self) -> bool:
        return all(self.coefficient(self.dim_d - a) == c for a, c in self.terms)

    def invariant_violations(self) -> list[str]:
        problems = []
        if self.coefficient(0) != 1 or self.coefficient(self.dim_d) != 1:
            problems.append("psi_0 and psi_d must both be 1")
        if not self.symmetry_holds():
            problems.append("psi_a != psi_(d-a)")
        if any(c < 0 for _, c in self.terms):
            problems.append("negative coefficient")
        if any(not 0 <= a <= self.dim_d for a, _ in self.terms):
            problems.append("exponent outside [0, d]")
        return problems

    def __str__(self) -> str:
        return " + ".join(f"{c}*(uv)^({a.numerator}/{a.denominator})" for a, c in self.terms)


def stringy_euler(E: StringyEFunction) -> Fraction:
    """Value of the E-function at ``uv = 1``."""
    return Fraction(sum(c for _, c in E.terms))


def _require_canonical(P: LatticePolytope) -> list:
    boundary, interior = lattice_points(P)
    if not P.origin_interior or interior != [tuple(0 for _ in range(P.dim))]:
        raise NotCanonicalFano("polytope is not canonical Fano")
    return boundary


def stringy_e_general(P: LatticePolytope, strategy: str = "all_boundary_points") -> StringyEFunction:
    """Sum over the cones of a simplicial subdivision of the spanning fan of
    ``(t-1)^(d - dim) * sum(t^(dim + kappa(n)))`` over box points ``n``."""
    d = P.dim
    if d not in (2, 3):
        raise UnsupportedDimension(f"E-functions are implemented for d in (2, 3), got {d}")
    _require_canonical(P)
    fan = simplicial_subdivision(spanning_fan(P), P, strategy)
    acc: dict[Fraction, int] = defaultdict(int)
    for cone_id, cone in enumerate(fan.cones):
        k = cone.dim
        m = d - k
        for bp in box_points(cone, cone_id):
            e = k + bp.kappa
            for j in range(m + 1):
                acc[e + j] += comb(m, j) * (-1) ** (m - j)
    if any(c < 0 for c in acc.values()):
        bad = {str(a): c for a, c in acc.items() if c < 0}
        raise InternalInconsistency(f"negative E-function coefficients {bad}")
    return StringyEFunction.from_mapping(d, acc)


def stringy_e_canonical3d(P: LatticePolytope) -> StringyEFunction:
    """Closed form for canonical Fano 3-polytopes from facet volumes and
    lattice distances."""
    if P.dim != 3:
        raise UnsupportedDimension(f"closed form needs d = 3, got {P.dim}")
    boundary = _require_canonical(P)
    r = len(boundary) + 1 - 4
    acc: dict[Fraction, int] = defaultdict(int)
    acc[Fraction(0)] += 1
    acc[Fraction(3)] += 1
    acc[Fraction(1)] += r
    acc[Fraction(2)] += r
    for facet in face_lattice(P, with_dual=False).facets:
        n = int(facet.lattice_distance_n)
        for k in range(1, n):
            acc[Fraction(k, n) + 1] += int(facet.normalized_volume_v)
    return StringyEFunction.from_mapping(3, acc)


def stringy_e_ldp(P: LatticePolytope) -> StringyEFunction:
    """Closed form for toric log del Pezzo surfaces."""
    if P.dim != 2 or not is_ldp_polygon(P):
        raise NotLDP("polytope is not an LDP-polygon")
    boundary, interior = lattice_points(P)
    fan = spanning_fan(P)
    acc: dict[Fraction, int] = defaultdict(int)
    acc[Fraction(0)] += 1
    acc[Fraction(2)] += 1
    acc[Fraction(1)] += len(boundary) - 2
    for n in interior:
        if not any(n):
            continue
        kap = kappa(fan, n)
        acc[2 + kap] += 1
        acc[-kap] += 1
    return StringyEFunction.from_mapping(2, acc)
