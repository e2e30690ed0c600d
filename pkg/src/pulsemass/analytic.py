"""Closed-form paraxial results for diffracting Gaussian pulses: energy,
photon number, invariant mass (three equivalent forms), speed deficit,
rest-frame energy, and the wide-beam limiting scalings.

Valid when lambda/w and lambda/(c*tau) are small; outside that regime use
the quadrature oracle in ``pulsemass.spectral``.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .constants import C, HBAR
from .spectral import GaussianPulseParams, validity_ratio


class ParaxialError(ValueError):
    """Inputs outside the validity range of the closed forms."""


class ParaxialWarning(UserWarning):
    """Paraxial small parameters are getting large; accuracy degrades."""


WARN_RATIO = 0.05
ERROR_RATIO = 0.5


@dataclass(frozen=True)
class PulseSummary:
    """Paraxial pulse observables; rest_energy = mass*c^2 and
    speed_deficit/c = mass^2 c^4/(2 energy^2) hold by construction."""

    energy: float         # erg
    photon_count: float
    mass: float           # g
    speed_deficit: float  # cm/s, c - v
    rest_energy: float    # erg
    wavelength: float     # cm


def _check_paraxial(params: GaussianPulseParams) -> tuple[float, float]:
    rw, rt = validity_ratio(params)
    worst = max(rw, rt)
    if worst > ERROR_RATIO:
        raise ParaxialError(
            f"closed forms invalid (lambda/w = {rw:.3g}, lambda/ctau = {rt:.3g}); "
            "use spectral oracle")
    if worst > WARN_RATIO:
        warnings.warn(
            f"paraxial ratios large (lambda/w = {rw:.3g}, lambda/ctau = {rt:.3g}); "
            "closed forms degrade quadratically", ParaxialWarning)
    return rw, rt


def pulse_energy(params: GaussianPulseParams) -> float:
    """Paraxial pulse energy sqrt(pi)*c*tau*w^2*E0^2/8 in erg."""
    return math.sqrt(math.pi) * C * params.tau * params.w**2 * params.e0**2 / 8.0


def summarize(params: GaussianPulseParams) -> PulseSummary:
    """All closed-form observables of a paraxial Gaussian pulse."""
    _check_paraxial(params)
    energy = pulse_energy(params)
    mass = math.sqrt(math.pi) * params.tau * params.w * params.e0**2 / (8.0 * params.omega0)
    photon_count = energy / (HBAR * params.omega0)
    speed_deficit = C * (mass * C * C) ** 2 / (2.0 * energy * energy)
    return PulseSummary(
        energy=energy,
        photon_count=photon_count,
        mass=mass,
        speed_deficit=speed_deficit,
        rest_energy=mass * C * C,
        wavelength=params.wavelength,
    )


def mass_from_energy(energy: float, lam: float, w: float) -> float:
    """m = energy/(2 pi c^2) * lambda/w, in g."""
    if energy <= 0.0 or lam <= 0.0 or w <= 0.0:
        raise ValueError("energy, lambda and w must be strictly positive")
    return energy * lam / (2.0 * math.pi * C * C * w)


def mass_from_photon_number(n: float, omega0: float, w: float) -> float:
    """m = N hbar omega0/(2 pi c^2) * lambda/w, in g."""
    if n < 0.0:
        raise ValueError("photon number must be nonnegative")
    if omega0 <= 0.0 or w <= 0.0:
        raise ValueError("omega0 and w must be strictly positive")
    lam = 2.0 * math.pi * C / omega0
    return n * HBAR * omega0 * lam / (2.0 * math.pi * C * C * w)


def w_limit_scaling(params: GaussianPulseParams, mode: str,
                    w_factors: list[float]) -> list[tuple[float, float]]:
    """Mass vs waist under the two wide-beam limits.

    mode "fixed_E0": amplitude held constant, m grows linearly in w.
    mode "fixed_N": photon number held constant, m falls as 1/w.
    """
    if any(f <= 0.0 for f in w_factors):
        raise ValueError("w factors must be strictly positive")
    out = []
    if mode == "fixed_E0":
        for f in w_factors:
            w = params.w * f
            m = math.sqrt(math.pi) * params.tau * w * params.e0**2 / (8.0 * params.omega0)
            out.append((w, m))
    elif mode == "fixed_N":
        n = pulse_energy(params) / (HBAR * params.omega0)
        for f in w_factors:
            w = params.w * f
            out.append((w, mass_from_photon_number(n, params.omega0, w)))
    else:
        raise ValueError(f"unknown scaling mode {mode!r}")
    return out


def rest_frame_energy(energy_lab: float, lam: float, w: float) -> float:
    """Rest-frame pulse energy (lambda/(2 pi w)) * energy_lab, in erg."""
    return mass_from_energy(energy_lab, lam, w) * C * C
