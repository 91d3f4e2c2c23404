"""Blaschke quotients as circle maps.

A finite Blaschke product maps the unit circle to itself, winding once per
zero; a quotient of two products is the general rational circle map. Its
argument derivative is a signed sum of Poisson kernels at the zeros and
poles, which is what every certification in this package rests on.
"""

import numpy as np

from circlemaps import (
    BlaschkeProduct,
    BlaschkeQuotient,
    arg_derivative,
    continuous_arg,
    poisson_kernel,
    winding,
)

B = BlaschkeProduct.make([0.5, -0.3j], np.exp(0.4j))
zeta = np.exp(0.9j)
print("|B(zeta)| on the circle:", abs(B(zeta)))
print("argument derivative at zeta:", arg_derivative(B, zeta))
print("  = sum of Poisson kernels:", sum(poisson_kernel(z, zeta) for z in B.zeros))

Q = BlaschkeQuotient.make([0.5, -0.3j, 0.1 + 0.1j], [0.2], np.exp(0.4j))
print("\nquotient degree difference:", Q.degree_difference)
print("winding / 2 pi:", winding(Q) / (2 * np.pi))

theta, vals = continuous_arg(Q, 512)
print("continuous argument runs from %.4f to %.4f" % (vals[0], vals[-1]))
print("endpoint increase / 2 pi:", (vals[-1] - vals[0]) / (2 * np.pi))
