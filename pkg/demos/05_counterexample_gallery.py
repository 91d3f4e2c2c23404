"""Embeddings with vanishing low-frequency coefficients.

Two constructions: a star-shaped quadrilateral with first coefficient zero,
and k-fold symmetric embeddings whose spectrum avoids a whole window around
zero. Writes SVG pictures of both image curves into ./out/.
"""

from pathlib import Path

import numpy as np

from circlemaps import (
    GapParams,
    StarParams,
    embedding_check_sampled,
    fourier_coefficients,
    gap_embedding,
    gap_symmetry_residual,
    star_embedding,
    star_first_coefficient,
    support,
)
from circlemaps.svg import curve_svg

out = Path("out")
out.mkdir(exist_ok=True)

p = StarParams(8.0, 1 / np.sqrt(3))
mp = star_embedding(p, 2**16)
spec = fourier_coefficients(mp)
print("star quadrilateral (8, 1/sqrt 3):")
print("  closed-form c(1):", star_first_coefficient(p))
print("  measured c(1):   ", abs(spec[1]))
print("  simple polygon:  ", embedding_check_sampled(star_embedding(p, 4096)).simple)
(out / "star.svg").write_text(curve_svg(star_embedding(p, 512).values))

for N in (1, 2):
    g = GapParams(N)
    mg = gap_embedding(g, 2**16)
    sg = fourier_coefficients(mg, tolerance=1e-6)
    window = [round(abs(sg[n]), 9) for n in range(-N, N + 1)]
    print(f"\nk = {g.k} symmetric embedding (window half-width N = {N}):")
    print("  |c(n)| for |n| <= N:", window)
    print("  detected support mod k:", sorted({n % g.k for n in support(sg)}))
    print("  symmetry residual:", gap_symmetry_residual(g))
    (out / f"gap_{N}.svg").write_text(curve_svg(gap_embedding(g, 2048).values))

print("\nwrote out/star.svg, out/gap_1.svg, out/gap_2.svg")
