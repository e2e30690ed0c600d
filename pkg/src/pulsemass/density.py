"""Local Lorentz-invariant mass density of an electromagnetic field from
sampled field strengths, with the dual-form identity as a built-in check.

Note: the volume integral of this density is NOT the pulse invariant mass
and is not boost-invariant; the two concepts are deliberately unrelated.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .constants import C

_NEG_TOL = 1e-12


@dataclass(frozen=True)
class FieldSample:
    """Electric (statvolt/cm) and magnetic (gauss) field vectors at a point."""

    e: tuple[float, float, float]
    h: tuple[float, float, float]

    def __post_init__(self):
        if not all(math.isfinite(x) for x in (*self.e, *self.h)):
            raise ValueError("field components must be finite")
        object.__setattr__(self, "e", tuple(float(x) for x in self.e))
        object.__setattr__(self, "h", tuple(float(x) for x in self.h))


def mass_density(sample: FieldSample) -> float:
    """Invariant mass density mu = sqrt(u^2 - S^2/c^2)/c^2 in g/cm^3,

    with u = (E^2 + H^2)/8pi the energy density and S = (c/4pi) E x H the
    Poynting vector.  Algebraically identical to the field-invariant form
    (1/8pi c^2) sqrt((E^2 - H^2)^2 + 4(E.H)^2).
    """
    # u^2 - S^2/c^2 cancels badly for near-null fields, so accumulate it in
    # extended precision before the final subtraction
    ex, ey, ez = (np.longdouble(x) for x in sample.e)
    hx, hy, hz = (np.longdouble(x) for x in sample.h)
    e2 = ex * ex + ey * ey + ez * ez
    h2 = hx * hx + hy * hy + hz * hz
    pi = np.longdouble(math.pi)
    u = (e2 + h2) / (8.0 * pi)
    sx = (ey * hz - ez * hy) / (4.0 * pi)   # S/c
    sy = (ez * hx - ex * hz) / (4.0 * pi)
    sz = (ex * hy - ey * hx) / (4.0 * pi)
    arg = u * u - (sx * sx + sy * sy + sz * sz)
    if arg < -_NEG_TOL * u * u:
        raise ValueError("u^2 < S^2/c^2: impossible for real fields, corrupted input")
    return float(np.sqrt(max(arg, np.longdouble(0.0)))) / (C * C)


def mass_density_invariant_form(sample: FieldSample) -> float:
    """The same density via the field invariants; kept as the self-check."""
    ex, ey, ez = sample.e
    hx, hy, hz = sample.h
    e2 = ex * ex + ey * ey + ez * ez
    h2 = hx * hx + hy * hy + hz * hz
    eh = ex * hx + ey * hy + ez * hz
    return math.sqrt((e2 - h2) ** 2 + 4.0 * eh * eh) / (8.0 * math.pi * C * C)


def mass_density_grid(samples: Iterable[FieldSample]) -> list[float]:
    """Element-wise mass_density; errors carry the offending index."""
    out = []
    for i, sample in enumerate(samples):
        try:
            out.append(mass_density(sample))
        except ValueError as exc:
            raise ValueError(f"sample {i}: {exc}") from exc
    return out
