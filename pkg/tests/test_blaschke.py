import cmath

import numpy as np
import pytest

from circlemaps.blaschke import (
    BlaschkeProduct,
    BlaschkeQuotient,
    arg_derivative,
    continuous_arg,
    continuous_arg_auto,
    evaluate,
    identity_quotient,
    log_derivative_on_circle,
    power_sums,
    quotient_arg_derivative,
    quotient_arg_grid,
    quotient_derivative_grid,
    quotient_values_grid,
    winding,
)
from circlemaps.disk import MoebiusDisk, poisson_kernel, pseudo_hyperbolic
from conftest import random_disk_points


def random_product(rng, degree, rmax=0.75):
    return BlaschkeProduct.make(
        random_disk_points(rng, degree, rmax), cmath.exp(1j * rng.uniform(0, 2 * np.pi))
    )


def test_evaluate_trivia():
    const = BlaschkeProduct.make([], 1.0)
    assert evaluate(const, 0.3 + 0.1j) == 1.0
    B = BlaschkeProduct.make([0.4 - 0.2j], cmath.exp(0.5j))
    assert evaluate(B, 0.4 - 0.2j) == 0.0
    a = 0.3 + 0.3j
    B1 = BlaschkeProduct.make([a], cmath.exp(1.1j))
    assert abs(evaluate(B1, 0.0) - (-cmath.exp(1.1j) * a)) < 1e-15


def test_unimodular_on_circle(rng):
    for _ in range(20):
        B = random_product(rng, int(rng.integers(0, 6)))
        zeta = cmath.exp(1j * rng.uniform(0, 2 * np.pi))
        assert abs(abs(evaluate(B, zeta)) - 1.0) < 1e-12


def test_arg_derivative_trivia():
    one_zero = BlaschkeProduct.make([0.0], 1.0)
    assert arg_derivative(one_zero, 1.0) == 1.0
    five = BlaschkeProduct.make([0.0] * 5, 1.0)
    assert arg_derivative(five, cmath.exp(0.3j)) == 5.0


def test_arg_derivative_is_poisson_sum(rng):
    B = random_product(rng, 3)
    zeta = cmath.exp(0.77j)
    expected = sum(poisson_kernel(z, zeta) for z in B.zeros)
    assert arg_derivative(B, zeta) == pytest.approx(expected, rel=1e-14)


def test_arg_derivative_matches_analytic_log_derivative(rng):
    for _ in range(50):
        B = random_product(rng, int(rng.integers(1, 6)))
        zeta = cmath.exp(1j * rng.uniform(0, 2 * np.pi))
        analytic = log_derivative_on_circle(B, zeta)
        assert abs(analytic.imag) < 1e-9 * abs(analytic)
        assert arg_derivative(B, zeta) == pytest.approx(analytic.real, rel=1e-10)


def _finite_difference_arg_derivative(B, theta, h=1e-5):
    args = []
    prev = None
    for t in (theta - h, theta, theta + h):
        a = cmath.phase(evaluate(B, cmath.exp(1j * t)))
        if prev is not None:
            while a - prev > np.pi:
                a -= 2 * np.pi
            while a - prev < -np.pi:
                a += 2 * np.pi
        args.append(a)
        prev = a
    return (args[2] - args[0]) / (2 * h)


def test_arg_derivative_against_finite_differences(rng):
    for _ in range(25):
        B = random_product(rng, 2)
        theta = rng.uniform(0, 2 * np.pi)
        fd = _finite_difference_arg_derivative(B, theta)
        assert abs(arg_derivative(B, cmath.exp(1j * theta)) - fd) < 1e-6


def test_quotient_arg_derivative_cases(rng):
    assert quotient_arg_derivative(identity_quotient(), 1.0) == 1.0
    zs = list(random_disk_points(rng, 2, 0.6))
    same = BlaschkeQuotient.make(zs, [], 1.0)
    # numerator == denominator realized by equal zero sets in separate objects
    num = BlaschkeQuotient.make(zs, [], 1.0)
    zeta = cmath.exp(0.4j)
    assert quotient_arg_derivative(num, zeta) == pytest.approx(
        quotient_arg_derivative(same, zeta), rel=1e-14
    )


def test_quadratic_family_minimum():
    # the degree-2-over-1 map with |pole| = 0.3 has derivative min 1/7
    from circlemaps.certify import quadratic_quotient

    Q = quadratic_quotient(0.3)
    theta = np.linspace(0, 2 * np.pi, 100000, endpoint=False)
    vals = quotient_derivative_grid(Q, 2**17)
    assert vals.min() == pytest.approx(1.0 / 7.0, abs=1e-6)
    assert quotient_arg_derivative(Q, 1.0) == pytest.approx(2 - poisson_kernel(0.3, 1.0), rel=1e-14)


def test_common_zero_rejected():
    with pytest.raises(ValueError):
        BlaschkeQuotient.make([0.3 + 0.1j, 0.2], [0.3 + 0.1j], 1.0)


def test_winding_degrees(rng):
    for deg in (1, 2, 4):
        B = BlaschkeQuotient.make(list(random_disk_points(rng, deg, 0.6)), [], 1.0)
        assert winding(B) == pytest.approx(2 * np.pi * deg, abs=1e-9)
    from circlemaps.certify import quadratic_quotient

    assert winding(quadratic_quotient(0.25)) == pytest.approx(2 * np.pi, abs=1e-9)


def test_continuous_arg_identity_and_constant():
    theta, vals = continuous_arg(identity_quotient(), 256)
    assert np.allclose(vals - vals[0], theta, atol=1e-12)
    const = BlaschkeQuotient.make([], [], cmath.exp(0.9j))
    _, cvals = continuous_arg(const, 64)
    assert np.allclose(cvals, 0.9, atol=1e-12)


def test_continuous_arg_endpoint_is_winding(rng):
    zs = list(random_disk_points(rng, 3, 0.6))
    ws = list(random_disk_points(rng, 2, 0.5))
    Q = BlaschkeQuotient.make(zs, ws, cmath.exp(0.2j))
    theta, vals = continuous_arg_auto(Q, 1024)
    assert vals[-1] - vals[0] == pytest.approx(winding(Q), abs=1e-8)


def test_continuous_arg_rejects_coarse_grid():
    from circlemaps.blaschke import GridTooCoarseError

    # a boundary-hugging zero at a grid midpoint hides a full turn inside one
    # interval; the unwrap must notice and demand refinement
    Q = BlaschkeQuotient.make([0.9999 * cmath.exp(1j * np.pi / 64)], [], 1.0)
    with pytest.raises(GridTooCoarseError):
        continuous_arg(Q, 64)
    theta, vals = continuous_arg_auto(Q, 64)
    assert vals[-1] - vals[0] == pytest.approx(2 * np.pi, abs=1e-8)


def test_moebius_conjugation_preserves_zero_distances(rng):
    zs = random_disk_points(rng, 4, 0.7)
    m = MoebiusDisk.make(0.3 - 0.2j, cmath.exp(0.8j))
    mapped = [m(z) for z in zs]
    for i in range(4):
        for j in range(i + 1, 4):
            assert pseudo_hyperbolic(zs[i], zs[j]) == pytest.approx(
                pseudo_hyperbolic(mapped[i], mapped[j]), abs=1e-10
            )


def test_power_sums_definition(rng):
    pts = random_disk_points(rng, 7, 0.8)
    T = power_sums(pts, 40)
    assert T[0] == 7
    for m in (1, 5, 40):
        assert T[m] == pytest.approx(np.sum(pts**m), rel=1e-12, abs=1e-14)


def test_grid_paths_match_direct_evaluation(rng):
    zs = list(random_disk_points(rng, 3, 0.7))
    ws = list(random_disk_points(rng, 2, 0.6))
    Q = BlaschkeQuotient.make(zs, ws, cmath.exp(-0.6j))
    g = 512
    vals = quotient_values_grid(Q, g)
    args = quotient_arg_grid(Q, g)
    D = quotient_derivative_grid(Q, g)
    for j in (0, 17, 100, 399):
        zeta = cmath.exp(2j * np.pi * j / g)
        assert abs(vals[j] - Q(zeta)) < 1e-11
        assert abs(np.exp(1j * args[j]) - Q(zeta)) < 1e-10
        assert D[j] == pytest.approx(quotient_arg_derivative(Q, zeta), abs=1e-10)
