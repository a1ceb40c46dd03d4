"""Boundary transfer matrices and the scattering amplitudes they encode.

The structure has four potential steps, so the full transfer matrix is a
product M = M1 M2 M3 M4 of 2x2 blocks, one per step.  The explicit form
of each block depends on which of the three energy ranges E falls in;
the three literal formula tables live in _range_i, _range_ii and
_range_iii below and are deliberately kept free of algebraic shortcuts
so they can be checked entry by entry.

Flux conservation shows up as det M = 1 together with M11 = conj(M22)
and M12 = conj(M21), giving |T|^2 + |R|^2 = 1 for T = 1/M11 and
R = M21/M11.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .core import (
    Kinematics,
    MatrixRange,
    PotentialConfig,
    Region,
    Zone,
    classify,
    kinematics,
)
from .errors import DegenerateMatrix, NumericalOverflow


@dataclass(frozen=True)
class Matrix2x2:
    """Complex 2x2 matrix with just the operations the engine needs."""

    m11: complex
    m12: complex
    m21: complex
    m22: complex

    def __matmul__(self, other: "Matrix2x2") -> "Matrix2x2":
        return Matrix2x2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def det(self) -> complex:
        return self.m11 * self.m22 - self.m12 * self.m21

    def entries(self) -> tuple[complex, complex, complex, complex]:
        return (self.m11, self.m12, self.m21, self.m22)


@dataclass(frozen=True)
class BoundaryFactors:
    """Exponential factors evaluated at the matching points.

    sigma0 and sigma_plus carry the outer boundaries at |x| = a, the
    gammas the inner ones at |x| = a_minus.  Each is exp(a k) for the
    appropriate region and position, so evanescent regions give real
    growth factors and oscillatory regions give unimodular phases.
    """

    sigma0: complex
    sigma_plus: complex
    gamma_plus: complex
    gamma_minus: complex


def _factors(cfg: PotentialConfig, k0: complex, kp: complex, km: complex) -> BoundaryFactors:
    try:
        bf = BoundaryFactors(
            sigma0=cmath.exp(cfg.a * k0),
            sigma_plus=cmath.exp(cfg.a * kp),
            gamma_plus=cmath.exp(cfg.a_minus * kp),
            gamma_minus=cmath.exp(cfg.a_minus * km),
        )
    except OverflowError as exc:
        raise NumericalOverflow(
            f"boundary exponential overflowed for a = {cfg.a:g}: {exc}"
        ) from None
    return bf


def boundary_factors(e: float, cfg: PotentialConfig) -> BoundaryFactors:
    """Boundary exponentials at energy E."""
    k0 = kinematics(e, Region.ZERO, cfg).k
    kp = kinematics(e, Region.PLUS, cfg).k
    km = kinematics(e, Region.MINUS, cfg).k
    return _factors(cfg, k0, kp, km)


def _range_i(bf: BoundaryFactors, kin0: Kinematics, kinp: Kinematics,
             kinm: Kinematics) -> tuple[Matrix2x2, Matrix2x2, Matrix2x2, Matrix2x2]:
    # m < E < v_minus: outside oscillatory, both inner regions evanescent
    # in the sense of the branch choice; weights enter as alpha0, beta+,
    # beta-.
    a0 = kin0.alpha
    bp = kinp.beta
    bm = kinm.beta
    s0, sp = bf.sigma0, bf.sigma_plus
    gp, gm = bf.gamma_plus, bf.gamma_minus
    m1 = Matrix2x2(
        0.5 * s0 * sp * (1.0 / a0 - bp),
        0.5 * (s0 / sp) * (1.0 / a0 + bp),
        -0.5 * (sp / s0) * (1.0 / a0 + bp),
        0.5 / (s0 * sp) * (bp - 1.0 / a0),
    )
    m2 = Matrix2x2(
        0.5 * (gm / gp) * (1.0 + bm / bp),
        0.5 / (gp * gm) * (1.0 - bm / bp),
        0.5 * gp * gm * (1.0 - bm / bp),
        0.5 * (gp / gm) * (1.0 + bm / bp),
    )
    m3 = Matrix2x2(
        0.5 * (gm / gp) * (1.0 + bp / bm),
        0.5 * gp * gm * (1.0 - bp / bm),
        0.5 / (gp * gm) * (1.0 - bp / bm),
        0.5 * (gp / gm) * (1.0 + bp / bm),
    )
    m4 = Matrix2x2(
        0.5 * s0 * sp * (a0 - 1.0 / bp),
        -0.5 * (sp / s0) * (a0 + 1.0 / bp),
        0.5 * (s0 / sp) * (a0 + 1.0 / bp),
        0.5 / (s0 * sp) * (1.0 / bp - a0),
    )
    return m1, m2, m3, m4


def _range_ii(bf: BoundaryFactors, kin0: Kinematics, kinp: Kinematics,
              kinm: Kinematics) -> tuple[Matrix2x2, Matrix2x2, Matrix2x2, Matrix2x2]:
    # v_minus < E < v_plus: the outer matrices coincide with range I, the
    # inner pair swaps beta- for alpha-.
    a0 = kin0.alpha
    bp = kinp.beta
    am = kinm.alpha
    s0, sp = bf.sigma0, bf.sigma_plus
    gp, gm = bf.gamma_plus, bf.gamma_minus
    m1 = Matrix2x2(
        0.5 * s0 * sp * (1.0 / a0 - bp),
        0.5 * (s0 / sp) * (1.0 / a0 + bp),
        -0.5 * (sp / s0) * (1.0 / a0 + bp),
        0.5 / (s0 * sp) * (bp - 1.0 / a0),
    )
    m2 = Matrix2x2(
        0.5 / (gp * gm) * (am - 1.0 / bp),
        -0.5 * (gm / gp) * (am + 1.0 / bp),
        0.5 * (gp / gm) * (am + 1.0 / bp),
        0.5 * gp * gm * (1.0 / bp - am),
    )
    m3 = Matrix2x2(
        0.5 / (gp * gm) * (1.0 / am - bp),
        0.5 * (gp / gm) * (1.0 / am + bp),
        -0.5 * (gm / gp) * (1.0 / am + bp),
        0.5 * gp * gm * (bp - 1.0 / am),
    )
    m4 = Matrix2x2(
        0.5 * s0 * sp * (a0 - 1.0 / bp),
        -0.5 * (sp / s0) * (a0 + 1.0 / bp),
        0.5 * (s0 / sp) * (a0 + 1.0 / bp),
        0.5 / (s0 * sp) * (1.0 / bp - a0),
    )
    return m1, m2, m3, m4


def _range_iii(bf: BoundaryFactors, kin0: Kinematics, kinp: Kinematics,
               kinm: Kinematics) -> tuple[Matrix2x2, Matrix2x2, Matrix2x2, Matrix2x2]:
    # E > v_plus: every region oscillatory, everything in terms of alphas.
    a0 = kin0.alpha
    ap = kinp.alpha
    am = kinm.alpha
    s0, sp = bf.sigma0, bf.sigma_plus
    gp, gm = bf.gamma_plus, bf.gamma_minus
    m1 = Matrix2x2(
        0.5 * (s0 / sp) * (1.0 + ap / a0),
        0.5 * s0 * sp * (1.0 - ap / a0),
        0.5 / (s0 * sp) * (1.0 - ap / a0),
        0.5 * (sp / s0) * (1.0 + ap / a0),
    )
    m2 = Matrix2x2(
        0.5 * (gp / gm) * (1.0 + am / ap),
        0.5 * gp * gm * (1.0 - am / ap),
        0.5 / (gp * gm) * (1.0 - am / ap),
        0.5 * (gm / gp) * (1.0 + am / ap),
    )
    m3 = Matrix2x2(
        0.5 * (gp / gm) * (1.0 + ap / am),
        0.5 / (gp * gm) * (1.0 - ap / am),
        0.5 * gp * gm * (1.0 - ap / am),
        0.5 * (gm / gp) * (1.0 + ap / am),
    )
    m4 = Matrix2x2(
        0.5 * (s0 / sp) * (1.0 + a0 / ap),
        0.5 / (s0 * sp) * (1.0 - a0 / ap),
        0.5 * s0 * sp * (1.0 - a0 / ap),
        0.5 * (sp / s0) * (1.0 + a0 / ap),
    )
    return m1, m2, m3, m4


_TABLES = {
    MatrixRange.I: _range_i,
    MatrixRange.II: _range_ii,
    MatrixRange.III: _range_iii,
}


def _factor_matrices_in_range(e: float, cfg: PotentialConfig,
                              rng: MatrixRange) -> tuple[Matrix2x2, ...]:
    kin0 = kinematics(e, Region.ZERO, cfg)
    kinp = kinematics(e, Region.PLUS, cfg)
    kinm = kinematics(e, Region.MINUS, cfg)
    bf = _factors(cfg, kin0.k, kinp.k, kinm.k)
    ms = _TABLES[rng](bf, kin0, kinp, kinm)
    for mat in ms:
        for z in mat.entries():
            if not cmath.isfinite(z):
                raise NumericalOverflow(
                    f"transfer-matrix entry overflowed at E = {e!r}"
                )
    return ms


def factor_matrices(e: float, cfg: PotentialConfig) -> tuple[Matrix2x2, Matrix2x2, Matrix2x2, Matrix2x2]:
    """The four per-step matrices M1..M4 for the range containing E."""
    rng, _ = classify(e, cfg)
    return _factor_matrices_in_range(e, cfg, rng)


def factor_determinants(e: float, cfg: PotentialConfig) -> tuple[complex, complex, complex, complex]:
    """Analytic determinants of M1..M4; their product is exactly 1.

    Each is a ratio of spinor weights of the two regions meeting at the
    step, so telescoping kills everything in the product.
    """
    rng, _ = classify(e, cfg)
    kin0 = kinematics(e, Region.ZERO, cfg)
    kinp = kinematics(e, Region.PLUS, cfg)
    kinm = kinematics(e, Region.MINUS, cfg)
    if rng is MatrixRange.I:
        return (
            kinp.beta / kin0.alpha,
            kinm.beta / kinp.beta,
            kinp.beta / kinm.beta,
            kin0.alpha / kinp.beta,
        )
    if rng is MatrixRange.II:
        return (
            kinp.beta / kin0.alpha,
            kinm.alpha / kinp.beta,
            kinp.beta / kinm.alpha,
            kin0.alpha / kinp.beta,
        )
    return (
        kinp.alpha / kin0.alpha,
        kinm.alpha / kinp.alpha,
        kinp.alpha / kinm.alpha,
        kin0.alpha / kinp.alpha,
    )


def _full_matrix_in_range(e: float, cfg: PotentialConfig, rng: MatrixRange) -> Matrix2x2:
    m1, m2, m3, m4 = _factor_matrices_in_range(e, cfg, rng)
    return m1 @ m2 @ m3 @ m4


def full_matrix(e: float, cfg: PotentialConfig) -> Matrix2x2:
    """Transfer matrix spanning the whole structure, M1 M2 M3 M4."""
    rng, _ = classify(e, cfg)
    return _full_matrix_in_range(e, cfg, rng)


@dataclass(frozen=True)
class ScatteringResult:
    """Amplitudes and probabilities of one scattering event."""

    e: float
    t: complex
    r: complex
    t2: float
    r2: float
    matrix_range: MatrixRange
    zone: Zone


def scatter(e: float, cfg: PotentialConfig) -> ScatteringResult:
    """Transmission and reflection at energy E.

    T = 1/M11, R = M21/M11; flux conservation guarantees
    |T|^2 + |R|^2 = 1 up to roundoff.
    """
    rng, zone = classify(e, cfg)
    m = _full_matrix_in_range(e, cfg, rng)
    if abs(m.m11) < 1e-300:
        raise DegenerateMatrix(f"M11 vanished at E = {e!r}")
    t = 1.0 / m.m11
    r = m.m21 / m.m11
    return ScatteringResult(
        e=e,
        t=t,
        r=r,
        t2=abs(t) ** 2,
        r2=abs(r) ** 2,
        matrix_range=rng,
        zone=zone,
    )
