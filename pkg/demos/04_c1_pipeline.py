"""The constructive C1 approximation pipeline.

A smooth periodic function is matched by arg(B(zeta)/zeta^n): its derivative
is approximated by a ring of Poisson kernels minus a constant, and choosing
the unimodular factor anchors the argument. A circle homeomorphism is then
approximated uniformly by certified rational diffeomorphisms in both
one-sided-spectrum forms.
"""

import numpy as np

from circlemaps import (
    CircleLift,
    PeriodicC1Function,
    approximate_c1,
    approximate_homeomorphism,
)

u = PeriodicC1Function.from_callable(
    lambda th: 0.3 * np.sin(th), lambda th: 0.3 * np.cos(th)
)
res = approximate_c1(u, 0.1)
print("C1 target 0.3 sin(theta), budget 0.1:")
print("  Blaschke degree n =", res.n)
print("  measured sup error      =", round(res.sup_error, 6))
print("  measured derivative err =", round(res.derivative_error, 6))
print("  kernel ring radius      =", res.log["r"])

lift = CircleLift.from_breakpoints([(0, 0), (np.pi, np.pi / 2), (2 * np.pi, 2 * np.pi)])
print("\npiecewise-linear homeomorphism, uniform budget 0.08:")
for direction in ("below", "above"):
    out = approximate_homeomorphism(lift, 0.08, direction)
    Q = out.quotient
    print(f"  {direction:5s}: degree {Q.numerator.degree}/{Q.denominator.degree}, "
          f"sup error {out.sup_error:.4f}, "
          f"certified {out.certification.verdict} "
          f"(margin {out.certification.margin:.3f})")
