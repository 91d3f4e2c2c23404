"""Fourier analysis of sampled circle maps.

Coefficients are computed with the uniform-grid discrete transform, which is
the trapezoid rule for periodic integrands and therefore exact for
trigonometric polynomials of degree below half the grid size. The symmetric
coefficient window |n| <= m/2 - 1 drops only the Nyquist bin.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import math
import warnings
from typing import Callable, Optional

import numpy as np

from .disk import TWO_PI, as_disk

VALID_KINDS = ("general", "unimodular", "embedding-claimed")
UNIMODULAR_TOL = 1e-9
DEFAULT_GRID = 4096
DEFAULT_SUPPORT_TOL = 1e-8


def grid_theta(m: int) -> np.ndarray:
    return np.arange(m) * (TWO_PI / m)


def _check_grid_size(m: int):
    if m < 64 or (m & (m - 1)) != 0:
        raise ValueError(f"grid size must be a power of two >= 64, got {m}")


@dataclass
class SampledCircleMap:
    """A circle map f: T -> C sampled on the uniform angular grid.

    values[j] = f(exp(2 pi i j / m)). An optional exact evaluator (and
    derivative) lets downstream consumers refine without resampling loss.
    """

    values: np.ndarray
    kind: str = "general"
    evaluator: Optional[Callable] = None
    derivative: Optional[Callable] = None

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex)
        _check_grid_size(len(self.values))
        if self.kind not in VALID_KINDS:
            raise ValueError(f"kind must be one of {VALID_KINDS}")
        if self.kind == "unimodular":
            dev = float(np.max(np.abs(np.abs(self.values) - 1.0)))
            if dev >= UNIMODULAR_TOL:
                raise ValueError(f"unimodular map deviates from |f|=1 by {dev:.3e}")

    @property
    def m(self) -> int:
        return len(self.values)

    @classmethod
    def from_function(cls, f: Callable, m: int = DEFAULT_GRID, kind: str = "general",
                      derivative: Optional[Callable] = None) -> "SampledCircleMap":
        theta = grid_theta(m)
        return cls(np.asarray(f(theta), dtype=complex), kind, f, derivative)


@dataclass
class FourierSpectrum:
    """Coefficients f_hat(n) over the symmetric window |n| <= m/2 - 1."""

    ns: np.ndarray
    coefficients: np.ndarray
    grid_size: int
    tolerance: float = DEFAULT_SUPPORT_TOL
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {int(n): i for i, n in enumerate(self.ns)}

    def __getitem__(self, n: int) -> complex:
        i = self._index.get(int(n))
        return complex(self.coefficients[i]) if i is not None else 0j

    def abs(self) -> np.ndarray:
        return np.abs(self.coefficients)

    def energy(self) -> float:
        return float(np.sum(self.abs() ** 2))


def fourier_coefficients(mp: SampledCircleMap, tolerance: float = DEFAULT_SUPPORT_TOL) -> FourierSpectrum:
    """DFT coefficients over the window |n| <= m/2 - 1 (trapezoid quadrature)."""
    m = mp.m
    F = np.fft.fft(mp.values) / m
    half = m // 2
    ns = np.arange(-(half - 1), half)
    coeffs = F[ns % m]
    return FourierSpectrum(ns, coeffs, m, tolerance)


def support(spec: FourierSpectrum) -> set:
    """Indices with |f_hat(n)| above the spectrum's tolerance."""
    mask = spec.abs() > spec.tolerance
    return {int(n) for n in spec.ns[mask]}


def enclosed_area(spec: FourierSpectrum) -> float:
    """Signed area pi * sum n |f_hat(n)|^2 enclosed by the image curve.

    Meaningful when the map is an embedding (the caller's claim). Warns when
    the outer quarter of the window still carries more than 1e-6 of mass,
    which signals a too-small window.
    """
    a = spec.abs() ** 2
    tail = float(np.sum(a[np.abs(spec.ns) > spec.grid_size // 4]))
    if tail > 1e-6:
        warnings.warn(
            f"spectral tail mass {tail:.3e} near the window edge; enlarge the grid",
            RuntimeWarning,
        )
    return math.pi * float(np.sum(spec.ns * a))


def parseval_defect(mp: SampledCircleMap) -> float:
    """|sum |f_hat|^2 - mean |f|^2| with both sides on the same grid."""
    spec = fourier_coefficients(mp)
    rhs = float(np.mean(np.abs(mp.values) ** 2))
    return abs(spec.energy() - rhs)


def onb_check(spec: FourierSpectrum, shifts: range) -> float:
    """Max deviation of shifted-coefficient inner products from delta_jk.

    The shifted sequences f_hat(. - k) form an orthonormal system exactly when
    the map is unimodular; the caller must pass a spectrum of such a map.
    """
    c = spec.coefficients
    shifts = list(shifts)
    worst = 0.0
    for i, j in enumerate(shifts):
        for k in shifts[i:]:
            d = k - j
            if d == 0:
                ip = np.vdot(c, c)
            else:
                ip = np.vdot(c[d:], c[:-d])  # <c(.-j), c(.-k)> telescopes to lag d
            target = 1.0 if d == 0 else 0.0
            worst = max(worst, abs(ip - target))
    return worst


def onb_check_map(mp: SampledCircleMap, shifts: range) -> float:
    if mp.kind != "unimodular":
        raise ValueError("orthonormality check requires a unimodular map")
    return onb_check(fourier_coefficients(mp), shifts)


def harmonic_extension(mp: SampledCircleMap, z) -> complex:
    """Series value sum_{n>=0} f_hat(n) z^n + sum_{n>=1} f_hat(-n) conj(z)^n.

    Truncation accuracy degrades near the circle; |z| > 0.999 warns.
    """
    z = as_disk(z)
    if abs(z) > 0.999:
        warnings.warn("harmonic extension evaluated very near the circle", RuntimeWarning)
    spec = fourier_coefficients(mp)
    pos = spec.ns >= 0
    neg = spec.ns < 0
    out = np.sum(spec.coefficients[pos] * z ** spec.ns[pos])
    out += np.sum(spec.coefficients[neg] * np.conjugate(z) ** (-spec.ns[neg]))
    return complex(out)


def spectrum_csv_rows(spec: FourierSpectrum):
    """Rows for the CSV interface: header n,re,im,abs, 17 significant digits."""
    yield "n,re,im,abs"
    for n, c in zip(spec.ns, spec.coefficients):
        yield f"{int(n)},{c.real:.17g},{c.imag:.17g},{abs(c):.17g}"


# ---------------------------------------------------------------------------
# trigonometric series helper (spectral resampling / differentiation)

class TrigSeries:
    """A trigonometric polynomial held by its FFT coefficient array.

    Backs the smooth periodic functions used by the approximation pipeline:
    exact resampling onto finer power-of-two grids, spectral differentiation
    and integration, and pointwise evaluation for off-grid arguments.
    """

    def __init__(self, coef: np.ndarray):
        self.coef = np.asarray(coef, dtype=complex)
        self.m = len(self.coef)

    @classmethod
    def from_samples(cls, values: np.ndarray) -> "TrigSeries":
        values = np.asarray(values, dtype=complex)
        return cls(np.fft.fft(values) / len(values))

    def freqs(self) -> np.ndarray:
        return np.fft.fftfreq(self.m, 1.0 / self.m).astype(int)

    def mean(self) -> complex:
        return complex(self.coef[0])

    def resample(self, g: int, real: bool = True) -> np.ndarray:
        """Values on the uniform grid of size g >= m (zero-padded FFT)."""
        if g < self.m:
            raise ValueError("resample target must be at least the native grid")
        if g == self.m:
            vals = np.fft.ifft(self.coef) * g
            return vals.real if real else vals
        c = np.zeros(g, dtype=complex)
        half = self.m // 2
        c[:half] = self.coef[:half]
        c[g - (half - 1):] = self.coef[half + 1:]
        # split the Nyquist bin symmetrically between +-m/2
        c[half] = self.coef[half] / 2.0
        c[g - half] += self.coef[half] / 2.0
        vals = np.fft.ifft(c) * g
        return vals.real if real else vals

    def derivative(self) -> "TrigSeries":
        return TrigSeries(self.coef * (1j * self.freqs()))

    def antiderivative(self) -> "TrigSeries":
        """Zero-mean antiderivative; requires (numerically) zero mean input."""
        k = self.freqs()
        out = np.zeros_like(self.coef)
        nz = k != 0
        out[nz] = self.coef[nz] / (1j * k[nz])
        return TrigSeries(out)

    def eval(self, theta) -> np.ndarray:
        """Direct evaluation at arbitrary angles (O(m) per point, chunked)."""
        theta = np.atleast_1d(np.asarray(theta, dtype=float))
        k = self.freqs()
        out = np.empty(len(theta))
        chunk = max(1, int(4e6 // max(self.m, 1)))
        for i in range(0, len(theta), chunk):
            blk = theta[i : i + chunk]
            out[i : i + chunk] = (
                (self.coef[None, :] * np.exp(1j * np.outer(blk, k))).sum(axis=1).real
            )
        return out


def sup_norm(values: np.ndarray) -> float:
    return float(np.max(np.abs(values)))
