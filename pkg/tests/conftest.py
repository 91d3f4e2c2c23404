import numpy as np
import pytest

from circlemaps import (
    certify_quotient,
    identity_quotient,
    pseudo_condition,
    pseudo_quotient,
    quadratic_quotient,
    terminating_family_quotient,
)
from circlemaps.certify import DIFFEOMORPHISM


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)


def random_disk_points(rng, n, rmax=0.7):
    r = rmax * np.sqrt(rng.uniform(0, 1, n))
    return r * np.exp(1j * rng.uniform(0, 2 * np.pi, n))


def random_pseudo_instance(rng, n=None, base_max=0.25, factor_max=0.9):
    """A (z, w) pair satisfying the pairing condition with comfortable margin."""
    if n is None:
        n = int(rng.integers(1, 6))
    z0 = random_disk_points(rng, 1, base_max)[0]
    while True:
        ws = random_disk_points(rng, n, 0.5)
        zs = [z0]
        for wk in ws:
            # place z_k at a pseudo-hyperbolic distance u * rhs from w_k
            u = rng.uniform(0.0, factor_max)
            dw0 = abs(wk - z0) / abs(1 - wk * np.conjugate(z0))
            t = u * (1 - dw0) ** 2 / (4 * n)
            xi = t * np.exp(1j * rng.uniform(0, 2 * np.pi))
            zk = (xi + wk) / (1 + np.conjugate(wk) * xi)
            zs.append(zk)
        res = pseudo_condition(zs, ws)
        if res.strict:
            return zs, list(ws)


@pytest.fixture(scope="session")
def homeo_gallery():
    """Certified circle homeomorphism quotients reused across modules."""
    rng = np.random.default_rng(7151)
    gallery = [
        ("identity", identity_quotient()),
        ("rotation", identity_quotient(np.exp(0.7j))),
        ("quadratic-0.1", quadratic_quotient(0.1)),
        ("quadratic-0.2i", quadratic_quotient(0.2j)),
        ("quadratic-0.3", quadratic_quotient(-0.3)),
        ("mobius-zero", pseudo_quotient([0.25 + 0.1j], [], np.exp(0.3j))),
        ("family-below", terminating_family_quotient("below", [0.05, 0.04j, 0.1])),
        ("family-above", terminating_family_quotient("above", [0.05, -0.06j])),
    ]
    for i in range(4):
        zs, ws = random_pseudo_instance(rng, n=int(rng.integers(2, 5)))
        gallery.append((f"pseudo-{i}", pseudo_quotient(zs, ws)))
    out = []
    for name, q in gallery:
        cert = certify_quotient(q)
        assert cert.verdict == DIFFEOMORPHISM, f"{name}: {cert.verdict}"
        out.append((name, q, cert))
    return out
