"""Potential geometry, energy classification and per-region kinematics.

Natural units hbar = c = 1 throughout.  With the default mass m = 1,
energies are read directly in units of m c^2 and lengths in units of the
reduced Compton wavelength 1/m.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .errors import BoundaryEnergy, ConfigError, SingularEnergy

#: Half-width of the rejection window around singular and boundary
#: energies, as a fraction of the mass.
SINGULAR_TOL = 1e-9


class Region(Enum):
    """The three distinct potential levels seen by the spinor."""

    ZERO = "zero"    # outside the structure, V = 0
    PLUS = "plus"    # the two barriers, V = v_plus
    MINUS = "minus"  # the elevated floor between them, V = v_minus


class MatrixRange(Enum):
    """Energy ranges selecting which transfer-matrix formula set applies."""

    I = "I"      # m < E < v_minus
    II = "II"    # v_minus < E < v_plus
    III = "III"  # E > v_plus


class Zone(Enum):
    """Physical energy zones used for reporting and resonance search."""

    LOWER_KLEIN = "lower-klein"      # (m, v_minus - m)
    GAP_LOWER = "gap-lower"          # (v_minus - m, v_minus + m)
    HIGHER_KLEIN = "higher-klein"    # (v_minus + m, v_plus - m)
    CONVENTIONAL = "conventional"    # (v_plus - m, v_plus + m)
    ABOVE_BARRIER = "above-barrier"  # (v_plus + m, inf)


#: Zones in order of increasing energy.
ZONE_ORDER = (
    Zone.LOWER_KLEIN,
    Zone.GAP_LOWER,
    Zone.HIGHER_KLEIN,
    Zone.CONVENTIONAL,
    Zone.ABOVE_BARRIER,
)


@dataclass(frozen=True)
class PotentialConfig:
    """Double square barrier of height v_plus on a floor of height v_minus.

    The potential is 0 for |x| >= a_plus + a_minus, v_plus on the two
    barriers a_minus < |x| < a_plus + a_minus, and v_minus on the floor
    |x| <= a_minus.  Both steps must be supercritical, which demands
    v_minus > 2 m and v_plus > v_minus + 2 m; construction enforces this,
    so every instance in circulation is valid.
    """

    v_plus: float
    v_minus: float
    a_plus: float
    a_minus: float
    m: float = 1.0

    def __post_init__(self):
        if not self.m > 0:
            raise ConfigError(f"m must be positive, got {self.m}")
        if not self.a_plus > 0:
            raise ConfigError(f"a_plus must be positive, got {self.a_plus}")
        if not self.a_minus > 0:
            raise ConfigError(f"a_minus must be positive, got {self.a_minus}")
        if not self.v_minus > 2.0 * self.m:
            raise ConfigError(
                f"v_minus must exceed 2m = {2.0 * self.m:g}, got {self.v_minus}"
            )
        if not self.v_plus > self.v_minus + 2.0 * self.m:
            raise ConfigError(
                f"v_plus must exceed v_minus + 2m = "
                f"{self.v_minus + 2.0 * self.m:g}, got {self.v_plus}"
            )

    @property
    def a(self) -> float:
        """Half-width of the whole structure, a_plus + a_minus."""
        return self.a_plus + self.a_minus

    def potential(self, region: Region) -> float:
        if region is Region.ZERO:
            return 0.0
        if region is Region.PLUS:
            return self.v_plus
        return self.v_minus


@dataclass(frozen=True)
class Kinematics:
    """Wave vector and spinor weights of one region at one energy."""

    k: complex
    alpha: complex
    beta: complex


def singular_energies(cfg: PotentialConfig) -> list[float]:
    """Energies where some region's wave vector vanishes, sorted ascending.

    These are U +/- m over the three potential levels; E = -m never
    enters since only E > m is admissible.
    """
    return sorted(
        {
            cfg.m,
            cfg.v_minus - cfg.m,
            cfg.v_minus + cfg.m,
            cfg.v_plus - cfg.m,
            cfg.v_plus + cfg.m,
        }
    )


def zone_interval(zone: Zone, cfg: PotentialConfig) -> tuple[float, float]:
    """Open energy interval (lo, hi) covered by the zone."""
    m, vm, vp = cfg.m, cfg.v_minus, cfg.v_plus
    table = {
        Zone.LOWER_KLEIN: (m, vm - m),
        Zone.GAP_LOWER: (vm - m, vm + m),
        Zone.HIGHER_KLEIN: (vm + m, vp - m),
        Zone.CONVENTIONAL: (vp - m, vp + m),
        Zone.ABOVE_BARRIER: (vp + m, math.inf),
    }
    return table[zone]


def _reject_singular(e: float, u: float, cfg: PotentialConfig) -> None:
    tol = SINGULAR_TOL * cfg.m
    for s in (u - cfg.m, u + cfg.m):
        if abs(e - s) < tol:
            raise SingularEnergy(
                e, f"E = {e!r} lies within {tol:g} of the singular energy {s:g}"
            )


def wave_vector(e: float, region: Region, cfg: PotentialConfig) -> complex:
    """Complex wave vector of the region, principal sqrt of m^2 - (E-U)^2.

    Real and positive where |E - U| < m (evanescent solutions), pure
    imaginary with positive imaginary part where |E - U| > m
    (oscillatory solutions).
    """
    u = cfg.potential(region)
    _reject_singular(e, u, cfg)
    d = e - u
    # factored form keeps the difference of squares accurate near |d| = m
    return cmath.sqrt((cfg.m - d) * (cfg.m + d))


def alpha_beta(e: float, region: Region, cfg: PotentialConfig) -> tuple[complex, complex]:
    """Spinor weights (alpha, beta) of the region, principal branch.

    Their product is +1 where the solutions are evanescent and -1 where
    they are oscillatory; each is the other's reciprocal up to that sign.
    """
    u = cfg.potential(region)
    _reject_singular(e, u, cfg)
    d = e - u
    alpha = cmath.sqrt((cfg.m - d) / (cfg.m + d))
    beta = cmath.sqrt((cfg.m + d) / (cfg.m - d))
    return alpha, beta


def kinematics(e: float, region: Region, cfg: PotentialConfig) -> Kinematics:
    """Bundle wave_vector and alpha_beta for one region."""
    k = wave_vector(e, region, cfg)
    alpha, beta = alpha_beta(e, region, cfg)
    return Kinematics(k=k, alpha=alpha, beta=beta)


def classify(e: float, cfg: PotentialConfig) -> tuple[MatrixRange, Zone]:
    """Matrix range and zone containing E.

    Raises BoundaryEnergy for E at or below threshold or within the
    singular tolerance of any range or zone boundary.
    """
    tol = SINGULAR_TOL * cfg.m
    m, vm, vp = cfg.m, cfg.v_minus, cfg.v_plus
    if e <= m + tol:
        raise BoundaryEnergy(
            e, f"E = {e!r} is at or below the scattering threshold m = {m:g}"
        )
    for b in (vm - m, vm, vm + m, vp - m, vp, vp + m):
        if abs(e - b) < tol:
            raise BoundaryEnergy(
                e, f"E = {e!r} lies within {tol:g} of the boundary energy {b:g}"
            )

    if e < vm:
        rng = MatrixRange.I
    elif e < vp:
        rng = MatrixRange.II
    else:
        rng = MatrixRange.III

    if e < vm - m:
        zone = Zone.LOWER_KLEIN
    elif e < vm + m:
        zone = Zone.GAP_LOWER
    elif e < vp - m:
        zone = Zone.HIGHER_KLEIN
    elif e < vp + m:
        zone = Zone.CONVENTIONAL
    else:
        zone = Zone.ABOVE_BARRIER
    return rng, zone
