"""circlemaps: numerics for circle homeomorphisms and embeddings.

Blaschke products and quotients as circle maps, Fourier spectra with support
detection, certified homeomorphism/diffeomorphism verdicts, a constructive
C1 approximation pipeline producing rational diffeomorphisms with one-sided
Fourier support, counterexample embeddings with vanishing coefficient
windows, and Heinz-type coefficient and curvature bounds.
"""

from .disk import (
    CirclePoint,
    DiskPoint,
    MoebiusDisk,
    harnack_gap_bound,
    moebius_apply,
    poisson_kernel,
    pseudo_hyperbolic,
)
from .blaschke import (
    BlaschkeProduct,
    BlaschkeQuotient,
    arg_derivative,
    continuous_arg,
    evaluate,
    identity_quotient,
    quotient_arg_derivative,
    winding,
)
from .fourier import (
    FourierSpectrum,
    SampledCircleMap,
    enclosed_area,
    fourier_coefficients,
    harmonic_extension,
    onb_check,
    onb_check_map,
    parseval_defect,
    support,
)
from .certify import (
    CertificationResult,
    certify_quadratic,
    certify_quotient,
    embedding_check_sampled,
    homeo_check_sampled,
    pseudo_condition,
    pseudo_quotient,
    quadratic_quotient,
    radial_sufficient,
    terminating_family_check,
    terminating_family_quotient,
)
from .approx import (
    CircleLift,
    PeriodicC1Function,
    PoissonCombination,
    approximate_c1,
    approximate_homeomorphism,
    kernel_pair_approximation,
    kernel_ring_split,
    kernel_sum_approximation,
    mollify_lift,
    periodic_antiderivative,
    quotient_from_combination,
)
from .gallery import (
    GapParams,
    StarParams,
    gap_embedding,
    gap_symmetry_residual,
    mobius_map,
    rational_family,
    star_embedding,
    star_first_coefficient,
)
from .bounds import (
    HALL_CONSTANT,
    WEITSMAN_CONSTANT,
    HeinzReport,
    HorconvexReport,
    curvature_bound,
    heinz_report,
    horconvex_report,
)

__version__ = "0.1.0"
