"""Regenerate src/stringyfano/data/reflexive3_sample.txt.

Draws random subsets of {-1,0,1}^3, keeps hulls that are reflexive, and adds
each polytope's dual (also reflexive). One polytope is kept per combination
of (volume, boundary points, f-vector, dual volume) so the sample covers
varied shapes. Deterministic for a fixed --seed.
"""

import argparse
import itertools
import random
from pathlib import Path

from stringyfano.fano import is_reflexive
from stringyfano.io import format_polytopes
from stringyfano.polytope import LatticePolytope, convex_hull, dual_polytope, face_lattice, lattice_points

CUBE = [p for p in itertools.product((-1, 0, 1), repeat=3) if any(p)]


def invariants(P: LatticePolytope):
    D = dual_polytope(P).as_lattice_polytope()
    boundary, _ = lattice_points(P)
    return (P.volume, len(boundary), tuple(face_lattice(P, with_dual=False).f_vector()), D.volume)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=20240601)
    ap.add_argument("--count", type=int, default=64)
    ap.add_argument("--output", default=str(Path(__file__).resolve().parents[1]
                                            / "src/stringyfano/data/reflexive3_sample.txt"))
    args = ap.parse_args()
    rng = random.Random(args.seed)
    found: dict = {}
    tries = 0
    while len(found) < args.count and tries < 200000:
        tries += 1
        pts = rng.sample(CUBE, rng.randint(4, 12))
        try:
            P = convex_hull(pts, dim=3)
        except ValueError:
            continue
        if not P.origin_interior or not is_reflexive(P):
            continue
        for Q in (P, dual_polytope(P).as_lattice_polytope()):
            found.setdefault(invariants(Q), Q)
    polys = [found[k] for k in sorted(found)][: args.count]
    header = f"# {len(polys)} reflexive 3-polytopes, rows are vertices (seed {args.seed})\n"
    Path(args.output).write_text(header + format_polytopes(polys))
    print(f"wrote {len(polys)} polytopes after {tries} draws to {args.output}")


if __name__ == "__main__":
    main()
