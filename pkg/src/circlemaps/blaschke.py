"""Finite Blaschke products and their quotients.

A Blaschke product sigma * prod (z - z_k)/(1 - conj(z_k) z) with zeros in the
open disk maps the circle to itself with winding 2*pi*degree. On the circle,
the derivative of its argument is the sum of Poisson kernels at the zeros,
which makes quotients of two products the natural carrier for circle
homeomorphism checks.

Two evaluation paths are provided for circle grids: a direct factor-by-factor
product (exact, O(n*g)) and a power-sum path that expands log-factors into the
series theta - 2 sum_m Im(T_m e^{-im theta})/m with T_m = sum_k z_k^m. The
series is a trigonometric polynomial up to a tail that is bounded in closed
form, so it scales to quotients with tens of thousands of zeros near the
boundary, where the direct product over a fine grid would be too slow.
"""

from __future__ import annotations

from dataclasses import dataclass
import cmath
import math
from typing import Sequence

import numpy as np

from .disk import TWO_PI, CirclePoint, as_disk, _as_complex, poisson_kernel, poisson_sum_grid

COMMON_ZERO_TOL = 1e-12
GRID_CAP = 2**20
_SERIES_TAIL_TOL = 1e-11


class GridTooCoarseError(RuntimeError):
    """Adjacent samples moved by more than pi; the caller must refine."""


class WindingInconsistencyError(RuntimeError):
    """Integrated argument derivative is not near a multiple of 2*pi."""


@dataclass(frozen=True)
class BlaschkeProduct:
    zeros: tuple
    sigma: complex

    @classmethod
    def make(cls, zeros=(), sigma=1.0) -> "BlaschkeProduct":
        zs = tuple(as_disk(z) for z in zeros)
        s = _as_complex(sigma)
        if abs(s) == 0:
            raise ValueError("sigma must be unimodular")
        return cls(zs, s / abs(s))

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def zeros_array(self) -> np.ndarray:
        return np.asarray(self.zeros, dtype=complex)

    def __call__(self, z) -> complex:
        return evaluate(self, z)


@dataclass(frozen=True)
class BlaschkeQuotient:
    numerator: BlaschkeProduct
    denominator: BlaschkeProduct

    @classmethod
    def make(cls, num_zeros=(), den_zeros=(), sigma=1.0) -> "BlaschkeQuotient":
        num = BlaschkeProduct.make(num_zeros, sigma)
        den = BlaschkeProduct.make(den_zeros, 1.0)
        q = cls(num, den)
        q._check_no_common_zero()
        return q

    def _check_no_common_zero(self):
        zn = np.unique(self.numerator.zeros_array())
        zd = np.unique(self.denominator.zeros_array())
        if len(zn) == 0 or len(zd) == 0:
            return
        # pseudo-hyperbolic distance below 1e-12 forces |z - w| < 2e-12, so a
        # sorted sweep over the merged deduplicated lists finds every candidate.
        merged = np.concatenate([zn, zd])
        labels = np.concatenate([np.zeros(len(zn), int), np.ones(len(zd), int)])
        order = np.lexsort((merged.imag, merged.real))
        merged, labels = merged[order], labels[order]
        for i in range(len(merged) - 1):
            j = i + 1
            while j < len(merged) and merged[j].real - merged[i].real < 5e-12:
                if labels[i] != labels[j] and abs(merged[i] - merged[j]) < 5e-12:
                    d = abs(merged[i] - merged[j]) / abs(1 - merged[i] * merged[j].conjugate())
                    if d < COMMON_ZERO_TOL:
                        raise ValueError(
                            f"numerator and denominator share a zero near {merged[i]}"
                        )
                j += 1

    @property
    def degree_difference(self) -> int:
        return self.numerator.degree - self.denominator.degree

    def __call__(self, z) -> complex:
        return evaluate(self.numerator, z) / evaluate(self.denominator, z)


def identity_quotient(sigma=1.0) -> BlaschkeQuotient:
    """The rotation sigma * zeta as a degree-1-over-0 quotient."""
    return BlaschkeQuotient.make([0.0], [], sigma)


def evaluate(B: BlaschkeProduct, z) -> complex:
    """Evaluate factor by factor (no polynomial expansion)."""
    z = _as_complex(z)
    out = complex(B.sigma)
    for zk in B.zeros:
        out *= (z - zk) / (1.0 - zk.conjugate() * z)
    return out


def log_derivative_on_circle(B: BlaschkeProduct, zeta) -> complex:
    """zeta * B'(zeta)/B(zeta) by direct differentiation of the product."""
    z = _as_complex(zeta)
    s = 0j
    for zk in B.zeros:
        s += 1.0 / (z - zk) + zk.conjugate() / (1.0 - zk.conjugate() * z)
    return z * s


def arg_derivative(B: BlaschkeProduct, zeta) -> float:
    """Derivative of arg B(e^{i theta}) at zeta: the Poisson-kernel sum over zeros."""
    return sum(poisson_kernel(zk, zeta) for zk in B.zeros)


def quotient_arg_derivative(Q: BlaschkeQuotient, zeta) -> float:
    """Argument derivative of the quotient; may be negative."""
    return arg_derivative(Q.numerator, zeta) - arg_derivative(Q.denominator, zeta)


# ---------------------------------------------------------------------------
# power-sum (moment) machinery

_POWER_CACHE: "OrderedDict[tuple, np.ndarray]" = None  # initialized below


def _power_sums_raw(pts: np.ndarray, M: int) -> np.ndarray:
    out = np.zeros(M + 1, dtype=complex)
    out[0] = len(pts)
    if len(pts) == 0 or M == 0:
        return out
    n = len(pts)
    B = 128
    V = np.ones(n, dtype=complex)
    col = np.broadcast_to(pts[:, None], (n, B))
    m = 1
    while m <= M:
        b = min(B, M - m + 1)
        P = np.cumprod(col[:, :b], axis=1)  # pts^1 .. pts^b
        out[m : m + b] = np.dot(V, P)
        V = V * P[:, b - 1]
        m += b
    return out


def power_sums(points: Sequence[complex], M: int) -> np.ndarray:
    """T[m] = sum_k z_k^m for m = 0..M (T[0] = number of points).

    Results are cached by content hash: the certification and approximation
    paths ask for the same large point sets repeatedly.
    """
    global _POWER_CACHE
    pts = np.ascontiguousarray(np.asarray(list(points), dtype=complex))
    if len(pts) * M < 1_000_000:
        return _power_sums_raw(pts, M)
    if _POWER_CACHE is None:
        from collections import OrderedDict

        _POWER_CACHE = OrderedDict()
    import hashlib

    key = (len(pts), hashlib.sha1(pts.tobytes()).digest())
    hit = _POWER_CACHE.get(key)
    if hit is not None and len(hit) >= M + 1:
        _POWER_CACHE.move_to_end(key)
        return hit[: M + 1]
    out = _power_sums_raw(pts, M)
    _POWER_CACHE[key] = out
    _POWER_CACHE.move_to_end(key)
    while len(_POWER_CACHE) > 12:
        _POWER_CACHE.popitem(last=False)
    return out


def _series_order(points: np.ndarray, tol: float) -> int:
    """Smallest M with 2*sum_k r_k^{M+1} <= tol, conservatively via max radius."""
    if len(points) == 0:
        return 1
    r = float(np.max(np.abs(points)))
    if r < 1e-300:
        return 1
    n = len(points)
    M = int(math.ceil(math.log(max(2.0 * n / tol, 4.0)) / -math.log(r))) + 1
    return max(M, 1)


def _moment_cost_ok(points_n: int, M: int) -> bool:
    return points_n * M <= 2_000_000_000 and M <= 2**22


def _fft_eval(coeffs: np.ndarray, g: int) -> np.ndarray:
    """Evaluate sum_{m=1..M} coeffs[m-1] e^{-i m theta_j} on the grid of size g.

    Coefficients are placed at FFT indices 1..M, so g must exceed M to avoid
    folding; the FFT kernel supplies the e^{-i m theta_j} factors.
    """
    M = len(coeffs)
    if M + 1 > g:
        raise ValueError("fft grid smaller than series order")
    c = np.zeros(g, dtype=complex)
    c[1 : M + 1] = coeffs
    return np.fft.fft(c)


def _grid_pair(g: int, M: int):
    """Choose an FFT size > M that g divides, and the subsampling stride."""
    ge = g
    while ge < M + 2:
        ge *= 2
    return ge, ge // g


def poisson_sum_grid_fast(points, g: int, tol: float = _SERIES_TAIL_TOL) -> np.ndarray:
    """sum_k P(z_k, .) on the uniform grid, via moments when cheaper."""
    pts = np.asarray([_as_complex(p) for p in points], dtype=complex)
    n = len(pts)
    if n == 0:
        return np.zeros(g)
    M = _series_order(pts, tol)
    direct_cost = n * g
    if direct_cost <= 50_000_000 or not _moment_cost_ok(n, M):
        return poisson_sum_grid(pts, g)
    T = power_sums(pts, M)
    ge, stride = _grid_pair(g, M)
    vals = _fft_eval(T[1:], ge)[::stride]
    return n + 2.0 * vals.real


def poisson_sum_signed_grid(pos, neg, g: int, tol: float = _SERIES_TAIL_TOL) -> np.ndarray:
    """sum_k P(z_k, .) - sum_k P(w_k, .) on the grid, one moment pass for both."""
    zp = np.asarray([_as_complex(p) for p in pos], dtype=complex)
    zn = np.asarray([_as_complex(p) for p in neg], dtype=complex)
    n_tot = len(zp) + len(zn)
    if n_tot == 0:
        return np.zeros(g)
    allpts = np.concatenate([zp, zn])
    M = _series_order(allpts, tol)
    if n_tot * g <= 50_000_000 or not _moment_cost_ok(n_tot, M):
        out = np.zeros(g)
        if len(zp):
            out += poisson_sum_grid(zp, g)
        if len(zn):
            out -= poisson_sum_grid(zn, g)
        return out
    S = power_sums(zp, M)[1:] - power_sums(zn, M)[1:]
    ge, stride = _grid_pair(g, M)
    vals = _fft_eval(S, ge)[::stride]
    return (len(zp) - len(zn)) + 2.0 * vals.real


def quotient_derivative_grid(Q: BlaschkeQuotient, g: int) -> np.ndarray:
    """Argument derivative of the quotient on the uniform grid of size g."""
    return poisson_sum_signed_grid(Q.numerator.zeros_array(), Q.denominator.zeros_array(), g)


def _arg_series_grid(zeros: np.ndarray, g: int, tol: float = _SERIES_TAIL_TOL) -> np.ndarray:
    """Continuous branch of sum_k arg-factor on the grid, minus the n*theta term."""
    if len(zeros) == 0:
        return np.zeros(g)
    M = _series_order(zeros, tol)
    if not _moment_cost_ok(len(zeros), M):
        raise RuntimeError("zeros too close to the circle for the series path")
    T = power_sums(zeros, M)
    m = np.arange(1, M + 1)
    ge, stride = _grid_pair(g, M)
    vals = _fft_eval(T[1:] / m, ge)[::stride]
    return -2.0 * vals.imag


def quotient_arg_grid(Q: BlaschkeQuotient, g: int) -> np.ndarray:
    """Continuous argument of Q(e^{i theta_j}) on the uniform grid.

    Branch anchored so that the value at theta = 0 is the principal argument
    of Q(1). Uses the log-series (always a continuous branch); falls back to
    phase unwrapping if zeros sit too close to the circle for the series.
    """
    zn = Q.numerator.zeros_array()
    zd = Q.denominator.zeros_array()
    theta = np.arange(g) * (TWO_PI / g)
    sigma_arg = cmath.phase(Q.numerator.sigma / Q.denominator.sigma)
    try:
        core = _arg_series_grid(zn, g) - _arg_series_grid(zd, g)
    except RuntimeError:
        phases = np.angle(quotient_values_grid(Q, g))
        vals = np.unwrap(phases)
        return vals - vals[0] + np.angle(Q(1.0))
    vals = sigma_arg + Q.degree_difference * theta + core
    # reduce the anchor to the principal branch at theta = 0
    shift = vals[0] - math.remainder(vals[0], TWO_PI)
    vals = vals - shift
    if vals[0] > math.pi:
        vals -= TWO_PI
    return vals


def quotient_values_grid(Q: BlaschkeQuotient, g: int) -> np.ndarray:
    """Samples Q(e^{2 pi i j / g}); unimodular up to rounding."""
    zn, zd = Q.numerator.zeros_array(), Q.denominator.zeros_array()
    n_ops = (len(zn) + len(zd)) * g
    if n_ops > 50_000_000:
        try:
            return np.exp(1j * quotient_arg_grid(Q, g))
        except RuntimeError:
            pass
    zeta = np.exp(1j * np.arange(g) * (TWO_PI / g))
    out = np.full(g, complex(Q.numerator.sigma / Q.denominator.sigma), dtype=complex)
    for zk in zn:
        out *= (zeta - zk) / (1.0 - np.conjugate(zk) * zeta)
    for wk in zd:
        out *= (1.0 - np.conjugate(wk) * zeta) / (zeta - wk)
    return out


def derivative_lipschitz_pointwise(Q: BlaschkeQuotient) -> float:
    """Certified bound on |d/dtheta of the argument derivative|, per-point form.

    Each zero or pole at radius r contributes 2r(1+r)/(1-r)^3, from bounding
    |d/dtheta |zeta-z|^2| <= 2r and |zeta-z| >= 1-r. Coarse but rigorous.
    """
    out = 0.0
    for zs in (Q.numerator.zeros_array(), Q.denominator.zeros_array()):
        if len(zs):
            r = np.abs(zs)
            out += float(np.sum(2.0 * r * (1.0 + r) / (1.0 - r) ** 3))
    return out


def derivative_lipschitz_moment(Q: BlaschkeQuotient, tol: float = 1e-9):
    """Certified bound 2*sum_m m|S_m| + tail on the derivative's theta-slope.

    S_m = sum z_k^m - sum w_k^m. The tail over m > M is bounded by the exact
    geometric formula per point; M is chosen so the tail is below tol. Returns
    (bound, M). Falls back to the per-point bound (returning M = 0) when the
    series would be too long to be worth it.
    """
    zn, zd = Q.numerator.zeros_array(), Q.denominator.zeros_array()
    allpts = np.concatenate([zn, zd]) if len(zn) or len(zd) else np.zeros(0, complex)
    if len(allpts) == 0:
        return 0.0, 1
    M = _series_order(allpts, tol)
    # the m|S_m| weighting needs a slightly longer series than plain tails
    M = int(M * 1.2) + 8
    if not _moment_cost_ok(len(allpts), M):
        return derivative_lipschitz_pointwise(Q), 0
    S = power_sums(zn, M)[1:] - power_sums(zd, M)[1:]
    m = np.arange(1, M + 1)
    bound = 2.0 * float(np.sum(m * np.abs(S)))
    # tail: 2 * sum_k sum_{m>M} m r^m = 2 * sum_k r^{M+1}((M+1) - M r)/(1-r)^2
    r = np.abs(allpts)
    r = r[r > 0]
    if len(r):
        tail = 2.0 * float(np.sum(r ** (M + 1) * ((M + 1) - M * r) / (1.0 - r) ** 2))
        bound += tail
    return bound, M


# ---------------------------------------------------------------------------
# winding and continuous argument

def winding(Q: BlaschkeQuotient, grid_size: int = 4096) -> float:
    """Total change of arg Q around the circle, a multiple of 2*pi.

    Integrates the argument derivative on a grid and rounds to the nearest
    multiple of 2*pi, checking agreement with the degree count to 1e-6 and
    refusing if the integral sits farther than 0.1 from any multiple.
    """
    expected = Q.degree_difference
    g = grid_size
    while True:
        integral = float(np.mean(quotient_derivative_grid(Q, g))) * TWO_PI
        k = round(integral / TWO_PI)
        if abs(integral - TWO_PI * expected) <= 1e-6 and k == expected:
            return TWO_PI * k
        if g >= GRID_CAP:
            if abs(integral - TWO_PI * k) > 0.1:
                raise WindingInconsistencyError(
                    f"integrated winding {integral:.6f} not near a multiple of 2*pi"
                )
            raise WindingInconsistencyError(
                f"integrated winding {integral / TWO_PI:.9f} turns, degree count {expected}"
            )
        g *= 2


def continuous_arg(Q: BlaschkeQuotient, grid_size: int):
    """Unwrapped argument of Q on [0, 2*pi] inclusive.

    Returns (theta, values) with grid_size + 1 samples; values[-1] - values[0]
    equals the winding. Raises GridTooCoarseError when adjacent samples jump
    by pi or more, in which case the caller should refine the grid.
    """
    if grid_size < 16:
        raise ValueError("grid_size must be at least 16")
    vals = quotient_values_grid(Q, grid_size)
    phases = np.angle(vals)
    d = np.diff(np.concatenate([phases, phases[:1]]))
    d = (d + np.pi) % TWO_PI - np.pi
    if np.any(np.abs(d) >= np.pi * (1 - 1e-9)):
        raise GridTooCoarseError("adjacent samples differ by pi or more; refine the grid")
    theta = np.linspace(0.0, TWO_PI, grid_size + 1)
    out = np.empty(grid_size + 1)
    out[0] = phases[0]
    out[1:] = phases[0] + np.cumsum(d)
    # a whole turn between samples wraps to nearly zero and evades the jump
    # check; the endpoint-vs-winding mismatch exposes it
    if abs((out[-1] - out[0]) - TWO_PI * Q.degree_difference) > 1e-6:
        raise GridTooCoarseError(
            "unwrapped argument misses turns (endpoint does not match the winding)"
        )
    return theta, out


def continuous_arg_auto(Q: BlaschkeQuotient, grid_size: int = 4096):
    """continuous_arg with automatic doubling up to the 2^20 grid cap."""
    g = grid_size
    while True:
        try:
            return continuous_arg(Q, g)
        except GridTooCoarseError:
            if g >= GRID_CAP:
                raise
            g *= 2
