"""Spanning fans and their simplicial subdivisions, together with the
support function kappa and the lattice points of half-open parallelepipeds."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import linalg
from .errors import (InternalInconsistency, NotCanonicalFano, NotSimplicial,
                     OriginNotInterior, UnsupportedDimension)
from .linalg import IntVector
from .polytope import LatticePolytope, compute_hull, face_lattice, lattice_points

STRATEGIES = ("vertices_only", "all_boundary_points")


@dataclass(frozen=True)
class Cone:
    """Cone generated by primitive lattice vectors (sorted)."""
    generators: tuple[IntVector, ...]

    def __post_init__(self):
        gens = tuple(sorted(tuple(g) for g in self.generators))
        for g in gens:
            if linalg.vector_gcd(g) != 1:
                raise ValueError(f"cone generator {g} is not primitive")
        object.__setattr__(self, "generators", gens)

    @cached_property
    def dim(self) -> int:
        return linalg.rank(self.generators) if self.generators else 0

    @property
    def is_simplicial(self) -> bool:
        return len(self.generators) == self.dim

    @cached_property
    def volume(self) -> int:
        """Normalized volume of ``conv(0, generators)`` in its own lattice."""
        if not self.generators:
            return 1
        origin = tuple(0 for _ in self.generators[0])
        from .polytope import lattice_volume
        return lattice_volume([origin, *self.generators])


@dataclass(frozen=True)
class Fan:
    dim: int
    cones: tuple[Cone, ...]

    @cached_property
    def rays(self) -> tuple[IntVector, ...]:
        return tuple(c.generators[0] for c in self.cones if c.dim == 1)

    def of_dim(self, k: int) -> list[Cone]:
        return [c for c in self.cones if c.dim == k]

    @property
    def maximal(self) -> list[Cone]:
        return self.of_dim(self.dim)

    @property
    def is_simplicial(self) -> bool:
        return all(c.is_simplicial for c in self.cones)

    def counts(self) -> list[int]:
        return [len(self.of_dim(k)) for k in range(self.dim + 1)]

    @cached_property
    def _solvers(self):
        out = []
        for cone in self.maximal:
            cols = linalg.transpose(cone.generators)
            out.append((cone, linalg.adjugate(cols), linalg.integer_det(cols)))
        return out


@dataclass(frozen=True)
class BoxPoint:
    point: IntVector
    cone_id: int | None
    lam: tuple[Fraction, ...]
    kappa: Fraction


def spanning_fan(P: LatticePolytope) -> Fan:
    """Fan of cones over the proper faces of ``P`` (plus the zero cone)."""
    if not P.origin_interior:
        raise OriginNotInterior("the origin is not in the interior of the polytope")
    lattice = face_lattice(P, with_dual=False)
    cones = []
    for face in lattice.faces:
        if face.dim >= P.dim:
            continue
        gens = tuple(linalg.make_primitive(P.vertices[i]) for i in face.vertex_ids)
        cones.append(Cone(gens))
    return Fan(P.dim, tuple(cones))


# --------------------------------------------------------------------------
# subdivisions


def _det2(a, b, c) -> int:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _locate(tri, q) -> tuple[str, tuple[int, int] | None]:
    """Position of ``q`` relative to a triangle of 2D points."""
    a, b, c = tri
    orient = _det2(a, b, c)
    sides = []
    for (p, r) in ((a, b), (b, c), (c, a)):
        s = _det2(p, r, q) * (1 if orient > 0 else -1)
        if s < 0:
            return "outside", None
        sides.append(s)
    zeros = [i for i, s in enumerate(sides) if s == 0]
    if not zeros:
        return "inside", None
    if len(zeros) == 1:
        i = zeros[0]
        return "edge", (i, (i + 1) % 3)
    return "vertex", None


def unimodular_triangulation(points: Sequence[Sequence[int]]) -> list[tuple[int, int, int]]:
    """Triangulate a lattice polygon into triangles of normalized area 1.

    ``points`` must be all lattice points of the polygon. Starts from a fan
    triangulation of the hull and inserts every remaining lattice point,
    splitting the triangle (or both triangles along an edge) it lands in.
    Returns index triples into ``points``.
    """
    pts = [tuple(p) for p in points]
    hull = compute_hull(pts)
    index = {p: i for i, p in enumerate(pts)}
    hv = [hull.points[i] for i in hull.vertices]
    v0 = min(hv)
    tris: list[tuple[int, int, int]] = []
    for a, b in hull.simplices:
        pa, pb = hull.points[a], hull.points[b]
        if v0 in (pa, pb) or _det2(v0, pa, pb) == 0:
            continue
        tris.append((index[v0], index[pa], index[pb]))
    for qi, q in enumerate(pts):
        for t in list(tris):
            where, edge = _locate([pts[i] for i in t], q)
            if where in ("outside", "vertex"):
                continue
            if where == "inside":
                tris.remove(t)
                a, b, c = t
                tris += [(a, b, qi), (b, c, qi), (c, a, qi)]
            else:
                u, w = t[edge[0]], t[edge[1]]
                for s in [s for s in tris if u in s and w in s]:
                    tris.remove(s)
                    o = next(i for i in s if i not in (u, w))
                    tris += [(u, o, qi), (w, o, qi)]
            break
    for t in tris:
        if abs(_det2(*(pts[i] for i in t))) != 1:
            raise InternalInconsistency(f"triangle {t} is not unimodular")
    return tris


def _facet_triangles(P: LatticePolytope, strategy: str, boundary: list[IntVector]):
    """Triangles (as 3-tuples of lattice points) subdividing every facet of ``P``."""
    triangles = []
    for m, c, ids in P.facets:
        verts = [P.vertices[i] for i in sorted(ids)]
        if strategy == "all_boundary_points":
            pts = [x for x in boundary if linalg.dot(m, x) + c == 0]
        else:
            pts = verts
        basis = linalg.sublattice_basis(pts)
        coords = [tuple(int(x) for x in linalg.coordinates(basis, linalg.sub(p, pts[0])))
                  for p in pts]
        if strategy == "all_boundary_points":
            tris = unimodular_triangulation(coords)
        else:
            hull = compute_hull(coords)
            v0 = min(range(len(coords)), key=lambda i: coords[i])
            tris = []
            for a, b in hull.simplices:
                ia, ib = coords.index(hull.points[a]), coords.index(hull.points[b])
                if v0 not in (ia, ib) and _det2(coords[v0], coords[ia], coords[ib]) != 0:
                    tris.append((v0, ia, ib))
        triangles += [tuple(pts[i] for i in t) for t in tris]
    return triangles


def simplicial_subdivision(fan: Fan, P: LatticePolytope, strategy: str = "all_boundary_points") -> Fan:
    """Simplicial subdivision of the spanning fan of a canonical Fano polytope.

    ``vertices_only`` triangulates each facet using its vertices;
    ``all_boundary_points`` uses every boundary lattice point and produces
    unimodular facet triangles.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    d = P.dim
    if d not in (2, 3):
        raise UnsupportedDimension(f"simplicial subdivisions are implemented for d in (2, 3), got {d}")
    boundary, interior = lattice_points(P)
    if interior != [tuple(0 for _ in range(d))]:
        raise NotCanonicalFano("polytope is not canonical Fano")
    cones: set[tuple[IntVector, ...]] = {()}
    if d == 2:
        for m, c, ids in P.facets:
            if strategy == "all_boundary_points":
                pts = sorted(x for x in boundary if linalg.dot(m, x) + c == 0)
            else:
                pts = sorted(P.vertices[i] for i in ids)
            for p in pts:
                cones.add((p,))
            for p, q in zip(pts, pts[1:]):
                cones.add(tuple(sorted((p, q))))
    else:
        for tri in _facet_triangles(P, strategy, boundary):
            tri = tuple(sorted(tri))
            cones.add(tri)
            for k in (1, 2):
                for sub in itertools.combinations(tri, k):
                    cones.add(sub)
    ordered = sorted(cones, key=lambda g: (len(g), g))
    return Fan(d, tuple(Cone(g) for g in ordered))


# --------------------------------------------------------------------------
# kappa and box points


def kappa(fan: Fan, n: Sequence[int]) -> Fraction:
    """Value at ``n`` of the piecewise linear function that is -1 on every ray
    generator and linear on each cone."""
    if not any(n):
        return Fraction(0)
    if not all(c.is_simplicial for c in fan.maximal):
        raise NotSimplicial("kappa needs a simplicial fan")
    for cone, adj, det in fan._solvers:
        num = [linalg.dot(row, n) for row in adj]
        if all(x * det >= 0 for x in num):
            return -Fraction(sum(num), det)
    raise InternalInconsistency(f"no cone of the fan contains {tuple(n)}")


def _cone_lattice_data(cone: Cone):
    gens = cone.generators
    origin = tuple(0 for _ in gens[0])
    basis = linalg.sublattice_basis([origin, *gens])
    U = linalg.transpose([[int(x) for x in linalg.coordinates(basis, g)] for g in gens])
    return basis, U


def _box_point(cone, cone_id, basis, U, x) -> BoxPoint:
    lam = linalg.solve_linear(U, x)
    point = tuple(sum(xj * b[i] for xj, b in zip(x, basis)) for i in range(len(basis[0])))
    return BoxPoint(point, cone_id, lam, -sum(lam, Fraction(0)))


def box_points(cone: Cone, cone_id: int | None = None) -> list[BoxPoint]:
    """Lattice points ``sum(l_i u_i)`` with every ``l_i`` in ``(0, 1]``.

    Enumerates one representative per class of ``Z^k / (generator lattice)``
    using the Hermite normal form of the generator matrix, then shifts its
    barycentric coordinates into ``(0, 1]``.
    """
    if not cone.is_simplicial:
        raise NotSimplicial(f"cone with generators {cone.generators} is not simplicial")
    if not cone.generators:
        return [BoxPoint((), cone_id, (), Fraction(0))]
    basis, U = _cone_lattice_data(cone)
    k = len(U)
    H, _, _ = linalg.hermite_normal_form(U)
    adj = linalg.adjugate(U)
    det = linalg.integer_det(U)
    out = []
    for r in itertools.product(*(range(H[i][i]) for i in range(k))):
        lam = [Fraction(linalg.dot(row, r), det) for row in adj]
        lam = [x - _ceil(x) + 1 for x in lam]
        x = [sum(U[i][j] * lam[j] for j in range(k)) for i in range(k)]
        point = tuple(int(sum(xj * b[i] for xj, b in zip(x, basis))) for i in range(len(basis[0])))
        out.append(BoxPoint(point, cone_id, tuple(lam), -sum(lam, Fraction(0))))
    out.sort(key=lambda b: b.point)
    return out


def box_points_bruteforce(cone: Cone, cone_id: int | None = None) -> list[BoxPoint]:
    """Same set as :func:`box_points`, by scanning the parallelepiped's
    bounding box in lattice coordinates and solving for each point."""
    if not cone.is_simplicial:
        raise NotSimplicial(f"cone with generators {cone.generators} is not simplicial")
    if not cone.generators:
        return [BoxPoint((), cone_id, (), Fraction(0))]
    basis, U = _cone_lattice_data(cone)
    k = len(U)
    ranges = [range(sum(min(0, a) for a in row), sum(max(0, a) for a in row) + 1) for row in U]
    out = []
    for x in itertools.product(*ranges):
        lam = linalg.solve_linear(U, x)
        if all(0 < li <= 1 for li in lam):
            out.append(_box_point(cone, cone_id, basis, U, list(x)))
    out.sort(key=lambda b: b.point)
    return out


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)
