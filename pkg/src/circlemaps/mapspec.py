"""JSON map specifications: the file format shared by the CLI and library.

A map spec is a JSON object with a "type" field:

    {"type": "blaschke_quotient", "zeros": [[re,im],...],
     "poles": [[re,im],...], "sigma": <angle in radians>}
    {"type": "mobius", "a": [re, im]}
    {"type": "star", "x": <float>, "y": <float>}
    {"type": "avoidable", "N": <int>}
    {"type": "samples", "values": [[re,im],...], "kind": "general"}

Disk points must satisfy |z| < 1; sample arrays must have power-of-two
length >= 64. Violations raise MapSpecError (CLI exit code 2).
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .blaschke import BlaschkeQuotient
from .fourier import SampledCircleMap
from .gallery import GapParams, StarParams, gap_embedding, mobius_map, rational_family, star_embedding

TYPES = ("blaschke_quotient", "mobius", "star", "avoidable", "samples")


class MapSpecError(ValueError):
    pass


def _point(v, what: str) -> complex:
    if (not isinstance(v, (list, tuple))) or len(v) != 2:
        raise MapSpecError(f"{what} must be a [re, im] pair, got {v!r}")
    try:
        z = complex(float(v[0]), float(v[1]))
    except (TypeError, ValueError):
        raise MapSpecError(f"{what} has non-numeric entries: {v!r}")
    if abs(z) >= 1.0 - 1e-12:
        raise MapSpecError(f"{what} must lie strictly inside the unit disk, |z| = {abs(z):.6f}")
    return z


def validate(spec: dict) -> dict:
    if not isinstance(spec, dict):
        raise MapSpecError("map spec must be a JSON object")
    t = spec.get("type")
    if t not in TYPES:
        raise MapSpecError(f"unknown map type {t!r}; expected one of {TYPES}")
    return spec


def quotient_from_spec(spec: dict) -> BlaschkeQuotient:
    """Build a Blaschke quotient from a spec of type blaschke_quotient or mobius."""
    validate(spec)
    t = spec["type"]
    if t == "mobius":
        a = _point(spec.get("a", [0.0, 0.0]), "a")
        # (zeta + a)/(1 + conj(a) zeta) is the Blaschke factor with zero -a
        return BlaschkeQuotient.make([-a], [], 1.0)
    if t != "blaschke_quotient":
        raise MapSpecError(f"map type {t!r} is not a rational quotient")
    zeros = [_point(z, "zero") for z in spec.get("zeros", [])]
    poles = [_point(w, "pole") for w in spec.get("poles", [])]
    sigma = cmath.exp(1j * float(spec.get("sigma", 0.0)))
    try:
        return BlaschkeQuotient.make(zeros, poles, sigma)
    except ValueError as e:
        raise MapSpecError(str(e))


def spec_from_quotient(Q: BlaschkeQuotient) -> dict:
    sigma = Q.numerator.sigma / Q.denominator.sigma
    return {
        "type": "blaschke_quotient",
        "zeros": [[z.real, z.imag] for z in Q.numerator.zeros],
        "poles": [[w.real, w.imag] for w in Q.denominator.zeros],
        "sigma": math.atan2(sigma.imag, sigma.real) % (2 * math.pi),
    }


def sampled_from_spec(spec: dict, m: int = 4096) -> SampledCircleMap:
    """Build a sampled circle map from any spec type."""
    validate(spec)
    t = spec["type"]
    try:
        if t in ("blaschke_quotient", "mobius"):
            if t == "mobius":
                return mobius_map(_point(spec.get("a", [0.0, 0.0]), "a"), m)
            return rational_family(quotient_from_spec(spec), m)
        if t == "star":
            try:
                p = StarParams(float(spec["x"]), float(spec["y"]))
            except KeyError as e:
                raise MapSpecError(f"star spec missing field {e}")
            return star_embedding(p, m)
        if t == "avoidable":
            try:
                p = GapParams(int(spec["N"]))
            except KeyError as e:
                raise MapSpecError(f"avoidable spec missing field {e}")
            return gap_embedding(p, m)
        vals = spec.get("values")
        if not isinstance(vals, list) or not vals:
            raise MapSpecError("samples spec needs a nonempty values array")
        values = np.array([complex(float(v[0]), float(v[1])) for v in vals])
        kind = spec.get("kind", "general")
        return SampledCircleMap(values, kind)
    except MapSpecError:
        raise
    except (ValueError, TypeError) as e:
        raise MapSpecError(str(e))
