"""Exact stringy E-functions, stringy Euler numbers and combinatorial
identities for canonical toric Fano polytopes (d <= 4)."""

from .batch import BatchSummary, CheckResult, run_batch
from .errors import StringyFanoError
from .fan import Cone, Fan, box_points, kappa, simplicial_subdivision, spanning_fan
from .fano import ClassificationReport, classify, is_canonical_fano, is_reflexive, lattice_hull_of_dual
from .identities import (cy_stringy_euler, cy_stringy_euler_normalfan, gauss_sum, identity24,
                         libgober_wood)
from .io import PolytopeRecord, emit_report, parse_polytopes
from .polytope import (LatticePolytope, RationalPolytope, convex_hull, dual_polytope, face_lattice,
                       lattice_distance, lattice_points, normalized_volume)
from .stringy import (StringyEFunction, stringy_e_canonical3d, stringy_e_general, stringy_e_ldp,
                      stringy_euler)

__version__ = "0.1.0"

__all__ = [
    "BatchSummary", "CheckResult", "ClassificationReport", "Cone", "Fan", "LatticePolytope",
    "PolytopeRecord", "RationalPolytope", "StringyEFunction", "StringyFanoError",
    "box_points", "classify", "convex_hull", "cy_stringy_euler", "cy_stringy_euler_normalfan",
    "dual_polytope", "emit_report", "face_lattice", "gauss_sum", "identity24",
    "is_canonical_fano", "is_reflexive", "kappa", "lattice_distance", "lattice_hull_of_dual",
    "lattice_points", "libgober_wood", "normalized_volume", "parse_polytopes", "run_batch",
    "simplicial_subdivision", "spanning_fan", "stringy_e_canonical3d", "stringy_e_general",
    "stringy_e_ldp", "stringy_euler",
]
