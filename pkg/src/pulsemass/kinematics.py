"""Exact special-relativistic arithmetic on discrete photon four-momenta.

All quantities are Gaussian-CGS: energies in erg, momenta in g*cm/s,
frequencies in rad/s.  Boosts are along the z axis only, which is the
propagation axis of every pulse considered here.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import C, HBAR

# Relative slack for the timelike-or-null check.  A spacelike photon sum
# indicates a bug upstream, not numerical noise, so beyond this we raise.
SPACELIKE_TOL = 1e-9

_UNIT_TOL = 1e-12


@dataclass(frozen=True)
class FourMomentum:
    """A four-momentum (e/c, px, py, pz); all components in g*cm/s."""

    e_over_c: float
    px: float
    py: float
    pz: float

    def __post_init__(self):
        if self.e_over_c < 0.0:
            raise ValueError("four-momentum energy must be nonnegative")
        p2 = self.px**2 + self.py**2 + self.pz**2
        if self.e_over_c**2 - p2 < -SPACELIKE_TOL * self.e_over_c**2:
            raise ValueError("spacelike four-momentum: corrupted ensemble")

    @property
    def p_abs(self) -> float:
        return math.sqrt(self.px**2 + self.py**2 + self.pz**2)


@dataclass(frozen=True)
class PhotonMode:
    """A single photon mode: angular frequency, unit direction, mean occupation.

    The implied four-momentum is null by construction (epsilon = c|p|).
    """

    omega: float
    direction: tuple[float, float, float]
    weight: float = 1.0

    def __post_init__(self):
        if self.omega <= 0.0:
            raise ValueError("mode frequency must be positive")
        if self.weight < 0.0:
            raise ValueError("mode weight must be nonnegative")
        nx, ny, nz = self.direction
        norm = math.sqrt(nx * nx + ny * ny + nz * nz)
        if abs(norm - 1.0) > _UNIT_TOL:
            raise ValueError(f"direction must be a unit vector (|n| = {norm})")
        object.__setattr__(self, "direction", (float(nx), float(ny), float(nz)))

    @classmethod
    def from_angles(cls, omega: float, theta: float, phi: float = 0.0,
                    weight: float = 1.0) -> "PhotonMode":
        """Mode at polar angle theta from +z, azimuth phi (radians)."""
        st = math.sin(theta)
        n = (st * math.cos(phi), st * math.sin(phi), math.cos(theta))
        return cls(omega, n, weight)


@dataclass(frozen=True)
class PhotonEnsemble:
    """A finite, ordered collection of weighted photon modes."""

    modes: tuple[PhotonMode, ...]

    def __post_init__(self):
        object.__setattr__(self, "modes", tuple(self.modes))


@dataclass(frozen=True)
class BoostFrame:
    """A boost along z with velocity fraction beta, |beta| < 1."""

    beta: float

    def __post_init__(self):
        if not abs(self.beta) < 1.0:
            raise ValueError("|beta| must be < 1")

    @property
    def gamma(self) -> float:
        return 1.0 / math.sqrt(1.0 - self.beta**2)


def total_four_momentum(ensemble: PhotonEnsemble) -> FourMomentum:
    """Weighted component-wise sum of hbar*omega/c * (1, n) over all modes."""
    if not ensemble.modes:
        raise ValueError("empty ensemble")
    e = math.fsum(m.weight * HBAR * m.omega / C for m in ensemble.modes)
    px = math.fsum(m.weight * HBAR * m.omega / C * m.direction[0] for m in ensemble.modes)
    py = math.fsum(m.weight * HBAR * m.omega / C * m.direction[1] for m in ensemble.modes)
    pz = math.fsum(m.weight * HBAR * m.omega / C * m.direction[2] for m in ensemble.modes)
    return FourMomentum(e, px, py, pz)


def invariant_mass(p: FourMomentum) -> float:
    """Invariant mass in g, via the cancellation-safe factored form.

    epsilon^2 - c^2 p^2 is evaluated as (e/c - |p|)(e/c + |p|): the two
    factors are far apart in magnitude for near-collinear ensembles and the
    product keeps the O(theta^2) deficit that a naive subtraction destroys.
    """
    pa = p.p_abs
    s = (p.e_over_c - pa) * (p.e_over_c + pa)
    if s < -SPACELIKE_TOL * p.e_over_c**2:
        raise ValueError("spacelike four-momentum: corrupted ensemble")
    return math.sqrt(max(s, 0.0)) / C


def pairwise_invariant_mass(ensemble: PhotonEnsemble) -> float:
    """Mass in g from the sum of pairwise four-products.

    m^2 c^2 = sum_{i,j} (p_i . p_j); the diagonal terms vanish identically
    for null photons, so only i < j pairs are accumulated (doubled).
    """
    if not ensemble.modes:
        raise ValueError("empty ensemble")
    modes = ensemble.modes
    terms = []
    for i in range(len(modes)):
        mi = modes[i]
        pi = mi.weight * HBAR * mi.omega / C
        for j in range(i + 1, len(modes)):
            mj = modes[j]
            pj = mj.weight * HBAR * mj.omega / C
            cos_ij = (mi.direction[0] * mj.direction[0]
                      + mi.direction[1] * mj.direction[1]
                      + mi.direction[2] * mj.direction[2])
            terms.append(pi * pj * (1.0 - cos_ij))
    s = 2.0 * math.fsum(terms)
    return math.sqrt(max(s, 0.0)) / C


def collinear_energy_deficit(ensemble: PhotonEnsemble) -> float:
    """epsilon - c*p_z in erg, as a direct sum of per-mode deficits.

    Each mode contributes weight * hbar*omega * (1 - n_z); for a
    near-collinear ensemble this keeps the O(theta^2) deficit exactly
    where the subtraction of two large totals would not.
    """
    if not ensemble.modes:
        raise ValueError("empty ensemble")
    return math.fsum(m.weight * HBAR * m.omega * (1.0 - m.direction[2])
                     for m in ensemble.modes)


def ensemble_velocity(p: FourMomentum) -> float:
    """Centroid propagation speed v = c^2 <p_z>/<epsilon> in cm/s."""
    if p.e_over_c <= 0.0:
        raise ValueError("zero-energy four-momentum has no velocity")
    v = C * p.pz / p.e_over_c
    return max(-C, min(C, v))


def boost_photon(mode: PhotonMode, frame: BoostFrame) -> PhotonMode:
    """Standard null-vector boost along z; occupation is Lorentz-invariant."""
    b = frame.beta
    g = frame.gamma
    k = mode.omega / C
    kx = k * mode.direction[0]
    ky = k * mode.direction[1]
    kz = k * mode.direction[2]
    k_new = g * (k - b * kz)          # omega'/c
    kz_new = g * (kz - b * k)
    omega_new = C * k_new
    nx, ny, nz = kx / k_new, ky / k_new, kz_new / k_new
    norm = math.sqrt(nx * nx + ny * ny + nz * nz)
    return PhotonMode(omega_new, (nx / norm, ny / norm, nz / norm), mode.weight)


def boost_ensemble(ensemble: PhotonEnsemble, frame: BoostFrame) -> PhotonEnsemble:
    return PhotonEnsemble(tuple(boost_photon(m, frame) for m in ensemble.modes))


def rest_frame(p: FourMomentum) -> BoostFrame:
    """Frame in which p_z vanishes; only massive momenta have one."""
    pa = p.p_abs
    s = (p.e_over_c - pa) * (p.e_over_c + pa)
    if s <= SPACELIKE_TOL * p.e_over_c**2:
        raise ValueError("no rest frame for null momentum")
    return BoostFrame(p.pz / p.e_over_c)
