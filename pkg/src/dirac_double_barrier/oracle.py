"""Independent scattering solver by direct boundary matching.

Writes the general solution in each of the five constant-potential
regions on the unnormalized spinor basis

    u(kappa) = (1, kappa / (m + E - U))^T,  weights A e^{kappa x} + B e^{-kappa x},

and imposes continuity of both components at the four interfaces.  With
unit incidence from the left (A1 = 1) and nothing returning on the right
(B5 = 0) that leaves an 8x8 complex linear system.  This basis and
bookkeeping differ deliberately from the ratio form behind the transfer
matrices, so the two routes to T and R share no transcription and can
cross-check each other.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .core import PotentialConfig, Region, wave_vector
from .errors import SingularSystem

#: Relative residual above which the linear solve is reported as singular.
RESIDUAL_LIMIT = 1e-10

# region index -> potential region, left to right
_REGIONS = (Region.ZERO, Region.PLUS, Region.MINUS, Region.PLUS, Region.ZERO)


@dataclass(frozen=True)
class AmplitudeSet:
    """Right- and left-moving amplitudes (A, B) per region, left to right.

    a[0] = 1 is the incident amplitude and b[4] = 0 by construction;
    the transmitted amplitude is a[4], the reflected one b[0].
    """

    a: tuple[complex, complex, complex, complex, complex]
    b: tuple[complex, complex, complex, complex, complex]
    residual: float

    @property
    def t(self) -> complex:
        return self.a[4]

    @property
    def r(self) -> complex:
        return self.b[0]


@dataclass(frozen=True)
class SpinorSample:
    """Both spinor components at one position."""

    x: float
    psi_plus: complex
    psi_minus: complex

    @property
    def density(self) -> float:
        return abs(self.psi_plus) ** 2 + abs(self.psi_minus) ** 2


def _slope(e: float, u: float, kappa: complex, m: float) -> complex:
    # lower-component weight of the basis spinor u(kappa)
    return kappa / (m + e - u)


def solve_amplitudes(e: float, cfg: PotentialConfig) -> AmplitudeSet:
    """Solve the boundary-matching system at energy E.

    Unknown ordering is (B1, A2, B2, A3, B3, A4, B4, A5); rows come in
    pairs, upper then lower spinor component, at x = -a, -a_minus,
    a_minus, a.
    """
    k0 = wave_vector(e, Region.ZERO, cfg)
    kp = wave_vector(e, Region.PLUS, cfg)
    km = wave_vector(e, Region.MINUS, cfg)
    m = cfg.m
    s0 = _slope(e, 0.0, k0, m)
    sp = _slope(e, cfg.v_plus, kp, m)
    sm = _slope(e, cfg.v_minus, km, m)

    a_out, a_in = cfg.a, cfg.a_minus
    mat = np.zeros((8, 8), dtype=complex)
    rhs = np.zeros(8, dtype=complex)

    def put(row: int, col: int, weight: complex, slope: complex) -> None:
        mat[row, col] = weight
        mat[row + 1, col] = weight * slope

    # x = -a: region 1 meets region 2
    put(0, 0, cmath.exp(k0 * a_out), -s0)            # B1 e^{-k0 x}
    put(0, 1, -cmath.exp(-kp * a_out), sp)           # A2 e^{kp x}
    put(0, 2, -cmath.exp(kp * a_out), -sp)           # B2 e^{-kp x}
    rhs[0] = -cmath.exp(-k0 * a_out)                 # A1 e^{k0 x}, A1 = 1
    rhs[1] = rhs[0] * s0

    # x = -a_minus: region 2 meets region 3
    put(2, 1, cmath.exp(-kp * a_in), sp)
    put(2, 2, cmath.exp(kp * a_in), -sp)
    put(2, 3, -cmath.exp(-km * a_in), sm)
    put(2, 4, -cmath.exp(km * a_in), -sm)

    # x = +a_minus: region 3 meets region 4
    put(4, 3, cmath.exp(km * a_in), sm)
    put(4, 4, cmath.exp(-km * a_in), -sm)
    put(4, 5, -cmath.exp(kp * a_in), sp)
    put(4, 6, -cmath.exp(-kp * a_in), -sp)

    # x = +a: region 4 meets region 5
    put(6, 5, cmath.exp(kp * a_out), sp)
    put(6, 6, cmath.exp(-kp * a_out), -sp)
    put(6, 7, -cmath.exp(k0 * a_out), s0)            # A5 e^{k0 x}

    try:
        v = np.linalg.solve(mat, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularSystem(f"boundary matching failed at E = {e!r}: {exc}") from None
    residual = float(np.linalg.norm(mat @ v - rhs) / np.linalg.norm(rhs))
    if not residual < RESIDUAL_LIMIT:
        raise SingularSystem(
            f"boundary matching at E = {e!r} left relative residual {residual:.3e}"
        )
    return AmplitudeSet(
        a=(1.0 + 0.0j, v[1], v[3], v[5], v[7]),
        b=(v[0], v[2], v[4], v[6], 0.0 + 0.0j),
        residual=residual,
    )


def _region_index(x: float, cfg: PotentialConfig) -> int:
    # interface points go to the inner region; continuity makes the
    # choice irrelevant up to the matching residual
    if x < -cfg.a:
        return 0
    if x < -cfg.a_minus:
        return 1
    if x <= cfg.a_minus:
        return 2
    if x <= cfg.a:
        return 3
    return 4


def wavefunction_profile(e: float, cfg: PotentialConfig,
                         xs: "np.ndarray | list[float]") -> list[SpinorSample]:
    """Matched spinor wavefunction sampled at the given positions."""
    amps = solve_amplitudes(e, cfg)
    k_by_region = {
        Region.ZERO: wave_vector(e, Region.ZERO, cfg),
        Region.PLUS: wave_vector(e, Region.PLUS, cfg),
        Region.MINUS: wave_vector(e, Region.MINUS, cfg),
    }
    out = []
    for x in xs:
        idx = _region_index(float(x), cfg)
        region = _REGIONS[idx]
        u = cfg.potential(region)
        kappa = k_by_region[region]
        s = _slope(e, u, kappa, cfg.m)
        ep = cmath.exp(kappa * float(x))
        em = 1.0 / ep
        a_amp, b_amp = amps.a[idx], amps.b[idx]
        out.append(
            SpinorSample(
                x=float(x),
                psi_plus=a_amp * ep + b_amp * em,
                psi_minus=a_amp * s * ep - b_amp * s * em,
            )
        )
    return out
