"""Coefficient bounds and the minimal-surface curvature bound.

The Hall and Weitsman constants bound the low coefficients of circle
homeomorphisms; horizontally convex embeddings get a Heinz-type bound from
their vertical extent and Lipschitz constant. Both translate into upper
bounds on the Gaussian curvature of a minimal graph over the disk.
"""

import numpy as np

from circlemaps import (
    HALL_CONSTANT,
    WEITSMAN_CONSTANT,
    StarParams,
    curvature_bound,
    heinz_report,
    horconvex_report,
    mobius_map,
    star_embedding,
)
from circlemaps.fourier import SampledCircleMap, grid_theta

ident = SampledCircleMap(np.exp(1j * grid_theta(4096)), "unimodular")
rep = heinz_report(ident)
print(f"identity: hall {rep.hall_lhs:.4f} >= {HALL_CONSTANT:.6f} -> {rep.hall_ok}")
print(f"          weitsman {rep.weitsman_lhs:.4f} > {WEITSMAN_CONSTANT:.6f} -> {rep.weitsman_ok}")
hor = horconvex_report(ident)
print(f"          horconvex bound {hor.bound:.6f}, lhs {hor.lhs:.4f}")
print(f"          curvature bound {curvature_bound(rep, hor):.4f}")

mob = heinz_report(mobius_map(0.5, 4096))
print(f"\nMoebius a=1/2: hall_lhs {mob.hall_lhs:.4f} (centered normalization fails; "
      f"flag {mob.hall_ok}), weitsman {mob.weitsman_lhs:.4f}")

star = star_embedding(StarParams(8.0, 1 / np.sqrt(3)), 2**14)
hs = horconvex_report(star)
print(f"\nstar dart: horizontally convex = {hs.is_horconvex}, "
      f"lhs {hs.lhs:.5f} >= bound {hs.bound:.2e} even though c(1) = 0")
print(f"curvature bound from the dart: {curvature_bound(None, hs):.1f}")
