"""Randomized invariant suite over the scattering engine.

Draws admissible energies from a seeded generator and tracks the worst
deviation of each conserved quantity: flux, the transfer-matrix
determinant, its two conjugation symmetries, and agreement between the
transfer-matrix and boundary-matching transmission amplitudes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import PotentialConfig, singular_energies
from .oracle import solve_amplitudes
from .transfer import full_matrix

DEFAULT_TOLERANCE = 1e-10
DEFAULT_SAMPLES = 10_000

#: Half-width of the rejection window around bad energies when sampling,
#: as a fraction of the mass.
SAMPLE_MARGIN = 1e-6


@dataclass(frozen=True)
class CheckResult:
    """Worst observed deviation of one invariant."""

    name: str
    worst: float
    at_energy: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.worst < self.tolerance


@dataclass(frozen=True)
class VerificationReport:
    config: PotentialConfig
    seed: int
    samples: int
    e_min: float
    e_max: float
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def render(self) -> str:
        cfg = self.config
        lines = [
            f"config: m={cfg.m:g} v_plus={cfg.v_plus:g} v_minus={cfg.v_minus:g} "
            f"a_plus={cfg.a_plus:g} a_minus={cfg.a_minus:g}",
            f"samples: {self.samples} seed: {self.seed} "
            f"window: ({self.e_min:g}, {self.e_max:g})",
        ]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(
                f"{status}  {c.name:<32} worst {c.worst:.3e} "
                f"(tol {c.tolerance:g}) at E = {c.at_energy:.9g}"
            )
        verdict = "all invariants hold" if self.passed else (
            "FAILED: " + ", ".join(c.name for c in self.failures)
        )
        lines.append(verdict)
        return "\n".join(lines)


def sample_energies(cfg: PotentialConfig, n: int, seed: int,
                    e_min: float | None = None,
                    e_max: float | None = None) -> list[float]:
    """n admissible energies, uniform over the window, deterministic in seed.

    Draws within (e_min, e_max) and rejects anything within SAMPLE_MARGIN
    of a singular or range-boundary energy.
    """
    if e_min is None:
        e_min = 1.001 * cfg.m
    if e_max is None:
        e_max = cfg.v_plus + 4.0 * cfg.m
    if not e_min > cfg.m:
        raise ValueError(f"e_min must exceed m = {cfg.m:g}, got {e_min}")
    if not e_max > e_min:
        raise ValueError("e_max must exceed e_min")
    rng = np.random.default_rng(seed)
    bad = np.array(sorted({*singular_energies(cfg), cfg.v_minus, cfg.v_plus}))
    width = SAMPLE_MARGIN * cfg.m
    out: list[float] = []
    while len(out) < n:
        for e in rng.uniform(e_min, e_max, size=n):
            if np.abs(bad - e).min() > width:
                out.append(float(e))
                if len(out) == n:
                    break
    return out


def run_verification(cfg: PotentialConfig,
                     samples: int = DEFAULT_SAMPLES,
                     seed: int = 0,
                     e_min: float | None = None,
                     e_max: float | None = None,
                     tolerance: float = DEFAULT_TOLERANCE) -> VerificationReport:
    """Evaluate every invariant at seeded random energies.

    Checks, each against the same tolerance on the worst deviation:

    * flux conservation |T|^2 + |R|^2 = 1
    * unit determinant of the full transfer matrix
    * M11 = conj(M22) and M12 = conj(M21)
    * transfer-matrix T against the boundary-matching amplitude
    """
    if e_min is None:
        e_min = 1.001 * cfg.m
    if e_max is None:
        e_max = cfg.v_plus + 4.0 * cfg.m
    energies = sample_energies(cfg, samples, seed, e_min, e_max)
    names = (
        "flux |T|^2 + |R|^2 = 1",
        "det M = 1",
        "M11 = conj(M22)",
        "M12 = conj(M21)",
        "transfer vs boundary matching",
    )
    worst = [0.0] * len(names)
    worst_at = [energies[0]] * len(names)
    for e in energies:
        mat = full_matrix(e, cfg)
        t = 1.0 / mat.m11
        r = mat.m21 / mat.m11
        devs = (
            abs(abs(t) ** 2 + abs(r) ** 2 - 1.0),
            abs(mat.det() - 1.0),
            abs(mat.m11 - mat.m22.conjugate()),
            abs(mat.m12 - mat.m21.conjugate()),
            abs(t - solve_amplitudes(e, cfg).t),
        )
        for i, d in enumerate(devs):
            if d > worst[i]:
                worst[i] = d
                worst_at[i] = e
    checks = tuple(
        CheckResult(name=names[i], worst=worst[i], at_energy=worst_at[i],
                    tolerance=tolerance)
        for i in range(len(names))
    )
    return VerificationReport(
        config=cfg,
        seed=seed,
        samples=samples,
        e_min=e_min,
        e_max=e_max,
        checks=checks,
    )
