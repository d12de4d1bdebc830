"""Lattice and rational polytopes in dimension 2 to 4.

Hulls are computed by an exact incremental algorithm on integer points.
Rational polytopes are handled by scaling with their minimal denominator
``l`` so that every predicate reduces to integer arithmetic.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import floor, ceil
from typing import Iterable, Sequence

from . import linalg
from .errors import (InternalInconsistency, InvalidPolytope, NotAFacet, NotFullDimensional,
                     OriginNotInterior)
from .linalg import IntVector, RatVector

SUPPORTED_DIMS = (2, 3, 4)


# --------------------------------------------------------------------------
# convex hull kernel


@dataclass(frozen=True)
class Hull:
    """Exact hull of a full-dimensional integer point set in ``Z^k``.

    ``planes`` holds ``(a, c)`` pairs with primitive ``a`` and
    ``a.x + c >= 0`` on the hull; ``simplices`` is a triangulation of the
    boundary by index tuples into ``points``.
    """
    points: tuple[IntVector, ...]
    planes: tuple[tuple[IntVector, int], ...]
    simplices: tuple[tuple[int, ...], ...]
    vertices: tuple[int, ...]


def _plane_through(pts: Sequence[IntVector], interior_num: IntVector, interior_den: int):
    p0 = pts[0]
    rows = [linalg.sub(p, p0) for p in pts[1:]]
    k = len(p0)
    normal = []
    for j in range(k):
        minor = [r[:j] + r[j + 1:] for r in rows]
        normal.append((-1) ** j * linalg.integer_det(minor))
    normal = linalg.make_primitive(normal)
    c = -linalg.dot(normal, p0)
    if linalg.dot(normal, interior_num) + interior_den * c < 0:
        normal = tuple(-a for a in normal)
        c = -c
    return normal, c


def compute_hull(points: Iterable[Sequence[int]]) -> Hull:
    pts = tuple(dict.fromkeys(tuple(p) for p in points))
    if not pts:
        raise NotFullDimensional("no points")
    k = len(pts[0])
    if k == 1:
        lo = min(range(len(pts)), key=lambda i: pts[i][0])
        hi = max(range(len(pts)), key=lambda i: pts[i][0])
        if lo == hi:
            raise NotFullDimensional("points do not span a segment")
        planes = (((1,), -pts[lo][0]), ((-1,), pts[hi][0]))
        return Hull(pts, planes, ((lo,), (hi,)), tuple(sorted((lo, hi))))

    # initial simplex
    simplex = [0]
    for i in range(1, len(pts)):
        if linalg.affine_rank([pts[j] for j in simplex] + [pts[i]]) == len(simplex):
            simplex.append(i)
            if len(simplex) == k + 1:
                break
    if len(simplex) < k + 1:
        raise NotFullDimensional(
            f"points span an affine space of dimension {len(simplex) - 1} < {k}")
    interior = tuple(sum(pts[i][j] for i in simplex) for j in range(k))
    den = k + 1

    facets: list[tuple[tuple[int, ...], IntVector, int]] = []
    for drop in simplex:
        verts = tuple(i for i in simplex if i != drop)
        a, c = _plane_through([pts[i] for i in verts], interior, den)
        facets.append((verts, a, c))

    used = set(simplex)
    for idx, p in enumerate(pts):
        if idx in used:
            continue
        visible = [f for f in facets if linalg.dot(f[1], p) + f[2] < 0]
        if not visible:
            continue
        ridges: Counter = Counter()
        for verts, _, _ in visible:
            for drop in range(len(verts)):
                ridges[verts[:drop] + verts[drop + 1:]] += 1
        vis_ids = {id(f) for f in visible}
        facets = [f for f in facets if id(f) not in vis_ids]
        for ridge, count in ridges.items():
            if count == 1:
                verts = ridge + (idx,)
                a, c = _plane_through([pts[i] for i in verts], interior, den)
                facets.append((verts, a, c))

    planes = tuple(sorted({(a, c) for _, a, c in facets}))
    vertices = []
    for i, p in enumerate(pts):
        active = [a for a, c in planes if linalg.dot(a, p) + c == 0]
        if len(active) >= k and linalg.rank(active) == k:
            vertices.append(i)
    return Hull(pts, planes, tuple(f[0] for f in facets), tuple(vertices))


def hull_volume(hull: Hull) -> int:
    """Normalized volume (``k! vol``) of a full-dimensional hull in ``Z^k``."""
    p0 = hull.points[0]
    total = 0
    for s in hull.simplices:
        total += abs(linalg.integer_det([linalg.sub(hull.points[i], p0) for i in s]))
    return total


def lattice_volume(points: Sequence[Sequence[int]]) -> int:
    """Normalized volume of ``conv(points)`` in the lattice of its affine span."""
    pts = [tuple(p) for p in points]
    basis = linalg.sublattice_basis(pts)
    k = len(basis)
    if k == 0:
        return 1
    coords = []
    for p in pts:
        x = linalg.coordinates(basis, linalg.sub(p, pts[0]))
        coords.append(tuple(int(c) for c in x))
    if len(coords) == k + 1:
        return abs(linalg.integer_det([linalg.sub(c, coords[0]) for c in coords[1:]]))
    return hull_volume(compute_hull(coords))


def normalized_volume(points: Sequence[Sequence], denominator: int | None = None) -> Fraction:
    """Normalized volume of the convex hull of rational points.

    Points are scaled by ``denominator`` (default: their least common
    denominator) and the lattice result divided by ``denominator**k``.
    """
    if denominator is None:
        denominator = linalg.common_denominator(x for p in points for x in p)
    scaled = [tuple(int(Fraction(x) * denominator) for x in p) for p in points]
    for p, q in zip(points, scaled):
        if any(Fraction(x) * denominator != y for x, y in zip(p, q)):
            raise ValueError("denominator does not clear the point coordinates")
    k = linalg.affine_rank(scaled)
    return Fraction(lattice_volume(scaled), denominator ** max(k, 0))


# --------------------------------------------------------------------------
# polytope types


def _as_int_vector(v) -> IntVector:
    out = []
    for x in v:
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise InvalidPolytope(f"non-integral coordinate {x}")
            x = x.numerator
        elif not isinstance(x, int):
            raise InvalidPolytope(f"non-integer coordinate {x!r}")
        out.append(int(x))
    return tuple(out)


@dataclass(frozen=True)
class LatticePolytope:
    """Full-dimensional lattice polytope given by its vertices.

    Vertices are stored in lexicographic order. Construction rejects
    degenerate input: repeated points or points that are not hull vertices.
    """
    vertices: tuple[IntVector, ...]

    def __post_init__(self):
        verts = [_as_int_vector(v) for v in self.vertices]
        if not verts:
            raise InvalidPolytope("a polytope needs vertices")
        d = len(verts[0])
        if any(len(v) != d for v in verts):
            raise InvalidPolytope("vertices have inconsistent lengths")
        if d not in SUPPORTED_DIMS:
            raise InvalidPolytope(f"unsupported ambient dimension {d}")
        if len(set(verts)) != len(verts):
            raise InvalidPolytope("repeated vertex")
        verts.sort()
        object.__setattr__(self, "vertices", tuple(verts))
        hull = self._hull
        if len(hull.vertices) != len(verts):
            extra = [verts[i] for i in range(len(verts)) if i not in hull.vertices]
            raise InvalidPolytope(f"points {extra} are not vertices of the hull")

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    @cached_property
    def _hull(self) -> Hull:
        return compute_hull(self.vertices)

    @cached_property
    def facets(self) -> tuple[tuple[IntVector, int, frozenset[int]], ...]:
        """``(inner normal m, offset c, vertex ids)`` with ``<m, x> + c >= 0``."""
        out = []
        for a, c in self._hull.planes:
            ids = frozenset(i for i, v in enumerate(self.vertices) if linalg.dot(a, v) + c == 0)
            out.append((a, c, ids))
        return tuple(sorted(out, key=lambda f: tuple(sorted(f[2]))))

    @property
    def origin_interior(self) -> bool:
        return all(c > 0 for _, c, _ in self.facets)

    def contains(self, x: Sequence) -> bool:
        return all(linalg.dot(a, x) + c >= 0 for a, c, _ in self.facets)

    @cached_property
    def volume(self) -> int:
        return hull_volume(self._hull)

    def scaled(self, k: int) -> "LatticePolytope":
        return LatticePolytope(tuple(linalg.scale(k, v) for v in self.vertices))

    def __repr__(self) -> str:
        return f"LatticePolytope({[list(v) for v in self.vertices]})"


@dataclass(frozen=True)
class RationalPolytope:
    """Full-dimensional polytope with rational vertices.

    ``denominator_l`` is the least ``l`` for which ``l * P`` is a lattice
    polytope.
    """
    vertices: tuple[RatVector, ...]
    denominator_l: int = field(init=False)

    def __post_init__(self):
        verts = sorted(tuple(Fraction(x) for x in v) for v in self.vertices)
        object.__setattr__(self, "vertices", tuple(verts))
        object.__setattr__(self, "denominator_l",
                           linalg.common_denominator(x for v in verts for x in v))
        # validates vertex set
        self.lattice_multiple

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    @cached_property
    def lattice_multiple(self) -> LatticePolytope:
        """The lattice polytope ``l * P``; vertex order matches ``self``."""
        l = self.denominator_l
        return LatticePolytope(tuple(tuple(int(x * l) for x in v) for v in self.vertices))

    @property
    def is_lattice(self) -> bool:
        return self.denominator_l == 1

    @property
    def origin_interior(self) -> bool:
        return self.lattice_multiple.origin_interior

    def contains(self, y: Sequence) -> bool:
        l = self.denominator_l
        return self.lattice_multiple.contains([Fraction(x) * l for x in y])

    def as_lattice_polytope(self) -> LatticePolytope:
        if not self.is_lattice:
            raise InvalidPolytope("polytope has non-integral vertices")
        return self.lattice_multiple

    def __repr__(self) -> str:
        return "RationalPolytope([" + ", ".join(
            "(" + ", ".join(str(x) for x in v) + ")" for v in self.vertices) + "])"


AnyPolytope = LatticePolytope | RationalPolytope


def convex_hull(points: Iterable[Sequence[int]], dim: int | None = None) -> LatticePolytope:
    """Lattice polytope spanned by ``points`` with redundant points dropped."""
    pts = [_as_int_vector(p) for p in points]
    if not pts:
        raise NotFullDimensional("no points")
    if dim is not None and any(len(p) != dim for p in pts):
        raise InvalidPolytope(f"points must have length {dim}")
    if len(pts[0]) not in SUPPORTED_DIMS:
        raise InvalidPolytope(f"unsupported ambient dimension {len(pts[0])}")
    hull = compute_hull(pts)
    return LatticePolytope(tuple(hull.points[i] for i in hull.vertices))


def dual_polytope(P: AnyPolytope) -> RationalPolytope:
    """``{y : <y, x> >= -1 for all x in P}``.

    Each facet ``<m, x> + c >= 0`` of ``P`` yields the dual vertex ``m / c``.
    """
    if isinstance(P, RationalPolytope):
        l = P.denominator_l
        base = P.lattice_multiple
    else:
        l = 1
        base = P
    if not base.origin_interior:
        raise OriginNotInterior("the origin is not in the interior of the polytope")
    # facet of l*P: <a, l x> + c >= 0  <=>  <a*l/c, x> >= -1
    return RationalPolytope(tuple(tuple(Fraction(a * l, c) for a in m) for m, c, _ in base.facets))


def lattice_points(P: AnyPolytope) -> tuple[list[IntVector], list[IntVector]]:
    """All lattice points of ``P`` split into ``(boundary, interior)``, each sorted."""
    if isinstance(P, RationalPolytope):
        l = P.denominator_l
        base = P.lattice_multiple
    else:
        l = 1
        base = P
    d = P.dim
    verts = P.vertices
    ranges = [range(ceil(min(Fraction(v[j]) for v in verts)),
                    floor(max(Fraction(v[j]) for v in verts)) + 1) for j in range(d - 1)]
    planes = [(a, c) for a, c, _ in base.facets]
    boundary, interior = [], []
    # scan the first d-1 coordinates; solve the facet inequalities for the last
    for prefix in itertools.product(*ranges):
        lo, hi = None, None
        for a, c in planes:
            rest = l * linalg.dot(a[:-1], prefix) + c
            ad = l * a[-1]
            if ad == 0:
                if rest < 0:
                    break
            elif ad > 0:
                b = -(rest // ad)
                lo = b if lo is None else max(lo, b)
            else:
                b = rest // -ad
                hi = b if hi is None else min(hi, b)
        else:
            if lo is None or hi is None:
                raise InternalInconsistency("unbounded lattice point scan")
            for t in range(lo, hi + 1):
                x = prefix + (t,)
                if any(l * linalg.dot(a, x) + c == 0 for a, c in planes):
                    boundary.append(x)
                else:
                    interior.append(x)
    return boundary, interior


# --------------------------------------------------------------------------
# face lattices


@dataclass
class Face:
    id: int
    dim: int
    vertex_ids: tuple[int, ...]
    normalized_volume_v: Fraction | None = None
    normal: IntVector | None = None
    lattice_distance_n: Fraction | None = None
    dual_face_id: int | None = None


@dataclass
class FaceLattice:
    """All faces of a polytope, from the empty face (dim -1) to the polytope.

    ``incidence[i]`` lists the faces of dimension ``dim + 1`` containing
    face ``i``. For polytopes with the origin in the interior, ``dual`` is
    the face lattice of the dual polytope and faces carry ``dual_face_id``.
    """
    polytope: AnyPolytope
    faces: list[Face]
    incidence: dict[int, list[int]]
    dual: "FaceLattice | None" = None
    _index: dict[tuple[int, ...], int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {f.vertex_ids: f.id for f in self.faces}

    @property
    def dim(self) -> int:
        return self.polytope.dim

    def of_dim(self, k: int) -> list[Face]:
        return [f for f in self.faces if f.dim == k]

    @property
    def facets(self) -> list[Face]:
        return self.of_dim(self.dim - 1)

    @property
    def edges(self) -> list[Face]:
        return self.of_dim(1)

    def face_with_vertices(self, ids: Iterable[int]) -> Face:
        return self.faces[self._index[tuple(sorted(ids))]]

    def face_count(self, k: int) -> int:
        return sum(1 for f in self.faces if f.dim == k)

    def f_vector(self) -> list[int]:
        return [self.face_count(k) for k in range(self.dim)]

    def points(self, face: Face) -> list[tuple]:
        return [self.polytope.vertices[i] for i in face.vertex_ids]

    def dual_face(self, face: Face) -> Face:
        if self.dual is None or face.dual_face_id is None:
            raise OriginNotInterior("face lattice has no dual")
        return self.dual.faces[face.dual_face_id]


def _face_sets(n_vertices: int, facet_sets: Sequence[frozenset[int]]) -> set[frozenset[int]]:
    faces = set(facet_sets)
    frontier = set(facet_sets)
    while frontier:
        new = set()
        for f in frontier:
            for g in facet_sets:
                h = f & g
                if h and h != f and h not in faces:
                    new.add(h)
        faces |= new
        frontier = new
    faces.add(frozenset(range(n_vertices)))
    faces.add(frozenset())
    return faces


def _assemble(polytope, vertices, facet_sets, denominator, facet_planes=None):
    d = len(vertices[0])
    sets = _face_sets(len(vertices), facet_sets)
    dims = {s: (linalg.affine_rank([vertices[i] for i in sorted(s)]) if s else -1) for s in sets}
    ordered = sorted(sets, key=lambda s: (dims[s], tuple(sorted(s))))
    faces = []
    for i, s in enumerate(ordered):
        ids = tuple(sorted(s))
        vol = None
        if s:
            vol = normalized_volume([vertices[j] for j in ids], denominator)
        faces.append(Face(i, dims[s], ids, vol))
    if facet_planes is not None:
        for f in faces:
            if f.dim == d - 1:
                m, n = facet_planes[frozenset(f.vertex_ids)]
                f.normal = m
                f.lattice_distance_n = n
    by_dim: dict[int, list[Face]] = {}
    for f in faces:
        by_dim.setdefault(f.dim, []).append(f)
    incidence = {}
    for f in faces:
        s = set(f.vertex_ids)
        incidence[f.id] = [g.id for g in by_dim.get(f.dim + 1, []) if s <= set(g.vertex_ids)]
    return FaceLattice(polytope, faces, incidence)


def _facet_planes_rational(P: AnyPolytope) -> dict[frozenset[int], tuple[IntVector, Fraction]]:
    if isinstance(P, RationalPolytope):
        l, base = P.denominator_l, P.lattice_multiple
    else:
        l, base = 1, P
    # <m, l x> + c >= 0  => facet at -<m, x> = c / l
    return {ids: (m, Fraction(c, l)) for m, c, ids in base.facets}


def face_lattice(P: AnyPolytope, with_dual: bool = True) -> FaceLattice:
    """Face lattice with volumes and facet data, linked to the dual face lattice."""
    if isinstance(P, RationalPolytope):
        den = P.denominator_l
    else:
        den = 1
    planes = _facet_planes_rational(P)
    lattice = _assemble(P, P.vertices, list(planes), den, planes)
    if with_dual and P.origin_interior:
        _attach_dual(lattice)
    return lattice


def _attach_dual(lattice: FaceLattice) -> None:
    P = lattice.polytope
    d = P.dim
    dual_P = dual_polytope(P)
    planes = _facet_planes_rational(P)
    l = P.denominator_l if isinstance(P, RationalPolytope) else 1
    # facet vertex-set of P  ->  index of its dual vertex
    vertex_of_facet = {}
    for ids, (m, c) in planes.items():
        y = tuple(Fraction(a) / c for a in m)
        vertex_of_facet[ids] = dual_P.vertices.index(y)
    facet_list = list(planes)
    dual_sets = {}
    for f in lattice.faces:
        s = set(f.vertex_ids)
        dual_sets[f.id] = frozenset(vertex_of_facet[F] for F in facet_list if s <= F)
    # facets of the dual are the duals of the vertices of P
    dual_facet_sets = [dual_sets[f.id] for f in lattice.of_dim(0)]
    dual_planes = {}
    for f in lattice.of_dim(0):
        lv = [int(Fraction(x) * l) for x in P.vertices[f.vertex_ids[0]]]
        # <y, v> = -1 on the dual facet, and v = (g/l) m with g = gcd(l v)
        g = linalg.vector_gcd(lv)
        dual_planes[dual_sets[f.id]] = (linalg.make_primitive(lv), Fraction(l, g))
    dual = _assemble(dual_P, dual_P.vertices, dual_facet_sets, dual_P.denominator_l, dual_planes)
    for f in lattice.faces:
        g = dual.face_with_vertices(dual_sets[f.id])
        if f.dim >= 0 and f.dim <= d - 1 and g.dim != d - 1 - f.dim:
            raise InternalInconsistency("dual face dimension mismatch")
        f.dual_face_id = g.id
        g.dual_face_id = f.id
    lattice.dual = dual
    dual.dual = lattice


def lattice_distance(lattice: FaceLattice, face: Face) -> Fraction:
    """Lattice distance ``n`` of a facet from the origin."""
    if face.dim != lattice.dim - 1:
        raise NotAFacet(f"face {face.id} has dimension {face.dim}")
    if face.lattice_distance_n is None or face.lattice_distance_n <= 0:
        raise OriginNotInterior("the origin is not in the interior of the polytope")
    return face.lattice_distance_n
