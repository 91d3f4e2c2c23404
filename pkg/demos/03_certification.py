"""Certified homeomorphism verdicts for rational circle maps.

The quadratic-over-one-factor family switches from diffeomorphism to
non-injective exactly at pole radius 1/3. The grid certifier brackets the
derivative minimum with a certified Lipschitz slack, so Diffeomorphism
verdicts carry a true lower bound and negative verdicts carry a witness.
"""

import numpy as np

from circlemaps import (
    certify_quadratic,
    certify_quotient,
    pseudo_condition,
    pseudo_quotient,
    quadratic_quotient,
)

print("quadratic family across the 1/3 threshold:")
for r in (0.1, 0.3, 1 / 3, 0.34, 0.45):
    closed = certify_quadratic(r)
    print(f"  |pole| = {r:.3f}: {closed.verdict:24s} margin {closed.margin:+.6f}")

print("\ngrid certifier on the same maps (closed form not consulted):")
for r in (0.25, 0.4):
    res = certify_quotient(quadratic_quotient(r))
    extra = f" witness at theta = {res.witness_theta:.3f}" if res.witness_theta else ""
    print(f"  |pole| = {r:.2f}: {res.verdict} margin {res.margin:+.5f}{extra}")

print("\npairing condition on pseudo-hyperbolically close zero/pole pairs:")
zs = [0.1, 0.21 + 0.02j]
ws = [0.2]
cond = pseudo_condition(zs, ws)
print("  statuses:", cond.statuses, "holds:", cond.holds, "strict:", cond.strict)
if cond.strict:
    print("  certified:", certify_quotient(pseudo_quotient(zs, ws)).verdict)
