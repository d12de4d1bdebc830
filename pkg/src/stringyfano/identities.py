"""Verifiers for combinatorial identities that tie face volumes of canonical
Fano polytopes to their stringy invariants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NotAlmostPseudoreflexive, UnsupportedDimension
from .fan import spanning_fan
from .fano import classify
from .polytope import LatticePolytope, face_lattice, normalized_volume
from .stringy import (StringyEFunction, _require_canonical, stringy_e_canonical3d,
                      stringy_e_general)


@dataclass(frozen=True)
class Identity24Report:
    volume_term: Fraction
    facet_term: Fraction
    edge_term: Fraction
    total: Fraction
    holds: bool


@dataclass(frozen=True)
class LibgoberWoodReport:
    lhs: Fraction
    rhs_volume: Fraction
    rhs_mixed: Fraction
    holds: bool


def identity24(P: LatticePolytope) -> Identity24Report:
    """``v(P) - sum v(F)/n_F + sum_edges v(e) v(e*)``, which should be 24."""
    if P.dim != 3:
        raise UnsupportedDimension(f"the 24 identity concerns d = 3, got {P.dim}")
    _require_canonical(P)
    lattice = face_lattice(P)
    volume = Fraction(P.volume)
    facet = sum((f.normalized_volume_v / f.lattice_distance_n for f in lattice.facets), Fraction(0))
    edge = sum((e.normalized_volume_v * lattice.dual_face(e).normalized_volume_v
                for e in lattice.edges), Fraction(0))
    total = volume - facet + edge
    return Identity24Report(volume, facet, edge, total, total == 24)


def _require_almost_pseudoreflexive(P: LatticePolytope) -> None:
    if P.dim not in (3, 4):
        raise UnsupportedDimension(f"Calabi-Yau Euler numbers need d in (3, 4), got {P.dim}")
    if not classify(P).is_almost_pseudoreflexive:
        raise NotAlmostPseudoreflexive("polytope is not almost pseudoreflexive")


def cy_stringy_euler(P: LatticePolytope) -> Fraction:
    """Stringy Euler number of the Calabi-Yau hypersurface family with Newton
    polytope ``P``, from face volumes and lattice distances.

    The polytope and facet terms carry the sign ``(-1)^(d-1)``; in d = 3
    this is ``v(P) - sum v(F)/n_F + sum_edges v(e) v(e*)``.
    """
    _require_almost_pseudoreflexive(P)
    d = P.dim
    lattice = face_lattice(P)
    sign = (-1) ** (d - 1)
    total = sign * Fraction(P.volume)
    total -= sign * sum((f.normalized_volume_v / f.lattice_distance_n for f in lattice.facets),
                        Fraction(0))
    for k in range(1, d - 1):
        for face in lattice.of_dim(k):
            total += (-1) ** (k - 1) * face.normalized_volume_v * lattice.dual_face(face).normalized_volume_v
    return total


def normal_cone_volume(lattice, face) -> Fraction:
    """Normalized volume of ``R_{>=0} face* ∩ P*``, the pyramid ``conv(0, face*)``."""
    dual = lattice.dual
    origin = tuple(Fraction(0) for _ in range(lattice.dim))
    pts = [origin] + dual.points(lattice.dual_face(face))
    return normalized_volume(pts, dual.polytope.denominator_l)


def cy_stringy_euler_normalfan(P: LatticePolytope) -> Fraction:
    """Same number as :func:`cy_stringy_euler`, summed over all faces of
    dimension >= 1 with genuine normal-cone volumes."""
    _require_almost_pseudoreflexive(P)
    lattice = face_lattice(P)
    total = Fraction(0)
    for face in lattice.faces:
        if face.dim >= 1:
            total += (-1) ** (face.dim - 1) * face.normalized_volume_v * normal_cone_volume(lattice, face)
    return total


def libgober_wood(P: LatticePolytope, E: StringyEFunction | None = None) -> LibgoberWoodReport:
    """Both sides of the combinatorial Libgober-Wood identity for the
    spanning fan of a canonical Fano polytope."""
    d = P.dim
    if d not in (2, 3):
        raise UnsupportedDimension(f"Libgober-Wood check needs d in (2, 3), got {d}")
    if E is None:
        E = stringy_e_canonical3d(P) if d == 3 else stringy_e_general(P)
    half = Fraction(d, 2)
    lhs = sum((c * (a - half) ** 2 for a, c in E.terms), Fraction(0))
    fan = spanning_fan(P)
    lattice = face_lattice(P)
    fan_volume = sum(Fraction(c.volume) for c in fan.maximal)
    rhs_volume = Fraction(d, 12) * fan_volume
    mixed = Fraction(0)
    # walls of the spanning fan are the cones over (d-2)-faces
    for face in lattice.of_dim(d - 2):
        cone = next(c for c in fan.of_dim(d - 1)
                    if set(c.generators) == {P.vertices[i] for i in face.vertex_ids})
        mixed += cone.volume * lattice.dual_face(face).normalized_volume_v
    rhs_mixed = mixed / 6
    return LibgoberWoodReport(lhs, rhs_volume, rhs_mixed, lhs == rhs_volume + rhs_mixed)


def gauss_sum(n: int) -> Fraction:
    """``6 * sum_{k=1}^{n-1} (1/4 - (k/n - 1/2)^2)`` by direct summation.

    Each term is ``(n^2 - (2k - n)^2) / (4 n^2)``; the numerators are summed
    exactly as integers (int64 while ``n^3`` fits, Python ints beyond).
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if n ** 3 < 2 ** 62:
        j = np.arange(2 - n, n - 1, 2, dtype=np.int64)
        squares = int(np.dot(j, j))
    else:
        squares = sum(j * j for j in range(2 - n, n - 1, 2))
    return Fraction(6 * ((n - 1) * n * n - squares), 4 * n * n)
