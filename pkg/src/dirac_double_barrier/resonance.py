"""Transmission-resonance search: real roots of M21(E).

Full transmission |T|^2 = 1 happens exactly where the off-diagonal
element of the full transfer matrix vanishes.  The search scans
|M21|^2 on a uniform grid over a zone, takes interior local minima as
brackets, and refines each bracket with a root solve on a sign-changing
real component of M21.

On the real energy axis M21 is numerically confined near one of the two
real components, with the other one only roundoff away from zero.  A
sign change in the roundoff component would send the root solve to a
noise crossing, so refinement orders candidate components by endpoint
magnitude and keeps the first root whose residual |M21| actually drops
below the acceptance threshold.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import brentq

from .core import PotentialConfig, Zone, singular_energies, zone_interval
from .errors import RefinementFailed
from .transfer import full_matrix, scatter

log = logging.getLogger(__name__)

#: Zones with finite extent, in order of increasing energy.
BOUNDED_ZONES = (
    Zone.LOWER_KLEIN,
    Zone.GAP_LOWER,
    Zone.HIGHER_KLEIN,
    Zone.CONVENTIONAL,
)

#: Default bounded zones searched when the caller does not choose.
DEFAULT_ZONES = (Zone.LOWER_KLEIN, Zone.HIGHER_KLEIN, Zone.CONVENTIONAL)

#: March cap above the top zone edge when estimating widths there, in
#: units of the mass.
_OPEN_ZONE_SPAN = 4.0


@dataclass(frozen=True)
class SearchSettings:
    """Knobs for the grid scan and bracket refinement.

    Energy-like fields are fractions of the mass and get scaled by cfg.m
    at the point of use, so one settings object works for any mass.
    """

    grid_points_per_zone: int = 4000
    refine_tolerance: float = 1e-12
    singular_margin: float = 1e-6
    residual_accept: float = 1e-8

    def __post_init__(self):
        if self.grid_points_per_zone < 16:
            raise ValueError(
                f"grid_points_per_zone must be at least 16, got {self.grid_points_per_zone}"
            )
        for name in ("refine_tolerance", "singular_margin", "residual_accept"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")


@dataclass(frozen=True)
class Resonance:
    """A refined full-transmission energy."""

    energy: float
    zone: Zone
    residual: float
    level: int
    fwhm: float | None = None


def _m21(e: float, cfg: PotentialConfig) -> complex:
    return full_matrix(e, cfg).m21


def _nudged_grid(lo: float, hi: float, n: int, avoid: list[float],
                 margin: float) -> np.ndarray:
    grid = np.linspace(lo, hi, n)
    for s in avoid:
        mask = np.abs(grid - s) < margin
        if mask.any():
            grid[mask] = np.where(grid[mask] >= s, s + margin, s - margin)
    return grid


def _refine_bracket(cfg: PotentialConfig, lo: float, hi: float,
                    settings: SearchSettings) -> tuple[float, float]:
    """Root of M21 inside (lo, hi) as (energy, residual)."""
    xtol = settings.refine_tolerance * cfg.m
    z_lo = _m21(lo, cfg)
    z_hi = _m21(hi, cfg)
    candidates = []
    if z_lo.real * z_hi.real < 0.0:
        candidates.append((max(abs(z_lo.real), abs(z_hi.real)),
                           lambda e: _m21(e, cfg).real))
    if z_lo.imag * z_hi.imag < 0.0:
        candidates.append((max(abs(z_lo.imag), abs(z_hi.imag)),
                           lambda e: _m21(e, cfg).imag))
    # dominant component first: the roundoff component can change sign too
    candidates.sort(key=lambda c: c[0], reverse=True)
    for _, f in candidates:
        root = brentq(f, lo, hi, xtol=xtol)
        residual = abs(_m21(root, cfg))
        if residual < settings.residual_accept:
            return float(root), float(residual)
    raise RefinementFailed(
        f"no component of M21 refined below {settings.residual_accept:g} "
        f"in ({lo:.9g}, {hi:.9g})"
    )


def _scan_interval(cfg: PotentialConfig, lo: float, hi: float,
                   settings: SearchSettings) -> list[tuple[float, float]]:
    """(energy, residual) pairs for the roots of M21 in (lo, hi)."""
    if not hi > lo:
        return []
    margin = settings.singular_margin * cfg.m
    avoid = [
        s
        for s in {*singular_energies(cfg), cfg.v_minus, cfg.v_plus}
        if lo < s < hi
    ]
    grid = _nudged_grid(lo, hi, settings.grid_points_per_zone, avoid, margin)
    g = [abs(_m21(float(e), cfg)) ** 2 for e in grid]
    hits: list[tuple[float, float]] = []
    for i in range(1, len(grid) - 1):
        if g[i] < g[i - 1] and g[i] < g[i + 1]:
            try:
                hits.append(_refine_bracket(cfg, float(grid[i - 1]),
                                            float(grid[i + 1]), settings))
            except RefinementFailed as exc:
                log.debug("bracket near E = %.9g rejected: %s", grid[i], exc)
    hits.sort(key=lambda h: h[0])
    # adjacent brackets occasionally converge to the same root
    deduped: list[tuple[float, float]] = []
    gap = max(10.0 * settings.refine_tolerance, 1e-10) * cfg.m
    for h in hits:
        if deduped and abs(h[0] - deduped[-1][0]) < gap:
            if h[1] < deduped[-1][1]:
                deduped[-1] = h
            continue
        deduped.append(h)
    return deduped


def find_resonances(cfg: PotentialConfig,
                    zones: "tuple[Zone, ...] | list[Zone] | None" = None,
                    settings: SearchSettings | None = None) -> list[Resonance]:
    """Resonances of the requested bounded zones, sorted by energy.

    Levels number the resonances within each zone from the bottom up.
    The open-ended top zone is excluded here because it needs an explicit
    cutoff; use find_above_barrier for it.
    """
    if settings is None:
        settings = SearchSettings()
    if zones is None:
        zones = DEFAULT_ZONES
    zones = list(dict.fromkeys(zones))
    if not zones:
        raise ValueError("zones must be nonempty")
    if Zone.ABOVE_BARRIER in zones:
        raise ValueError(
            "the above-barrier zone is unbounded; use find_above_barrier "
            "with an explicit e_max"
        )
    margin = settings.singular_margin * cfg.m
    found: list[Resonance] = []
    for zone in sorted(zones, key=lambda z: zone_interval(z, cfg)[0]):
        lo, hi = zone_interval(zone, cfg)
        hits = _scan_interval(cfg, lo + margin, hi - margin, settings)
        found.extend(
            Resonance(energy=e, zone=zone, residual=res, level=lvl)
            for lvl, (e, res) in enumerate(hits)
        )
    return sorted(found, key=lambda r: r.energy)


def find_above_barrier(cfg: PotentialConfig, e_max: float,
                       settings: SearchSettings | None = None) -> list[Resonance]:
    """Resonances of the open top zone up to e_max, sorted by energy."""
    if settings is None:
        settings = SearchSettings()
    lo, _ = zone_interval(Zone.ABOVE_BARRIER, cfg)
    if not e_max > lo:
        raise ValueError(
            f"e_max must exceed v_plus + m = {lo:g}, got {e_max}"
        )
    margin = settings.singular_margin * cfg.m
    hits = _scan_interval(cfg, lo + margin, e_max, settings)
    return [
        Resonance(energy=e, zone=Zone.ABOVE_BARRIER, residual=res, level=lvl)
        for lvl, (e, res) in enumerate(hits)
    ]


def _t2(e: float, cfg: PotentialConfig) -> float:
    return scatter(e, cfg).t2


def _half_crossing(cfg: PotentialConfig, start: float, limit: float,
                   step: float, settings: SearchSettings) -> float | None:
    """March from start toward limit until |T|^2 dips to 1/2, then refine.

    The step's sign sets the direction.  Returns None when the limit is
    reached with |T|^2 still above 1/2.
    """
    margin = settings.singular_margin * cfg.m
    bad = sorted({*singular_energies(cfg), cfg.v_minus, cfg.v_plus})
    direction = 1.0 if step > 0 else -1.0
    if (limit - start) * direction <= 0:
        return None
    prev = start
    i = 0
    while True:
        i += 1
        e = start + i * step
        at_limit = (e - limit) * direction >= 0.0
        if at_limit:
            e = limit
        for s in bad:
            if abs(e - s) < margin:
                e = s + margin * direction
        if _t2(e, cfg) <= 0.5:
            a, b = (prev, e) if direction > 0 else (e, prev)
            return float(
                brentq(lambda x: _t2(x, cfg) - 0.5, a, b,
                       xtol=settings.refine_tolerance * cfg.m)
            )
        if at_limit:
            return None
        prev = e


def estimate_fwhm(res: Resonance, cfg: PotentialConfig,
                  settings: SearchSettings | None = None,
                  lo_limit: float | None = None,
                  hi_limit: float | None = None) -> float | None:
    """Full width at half maximum of the |T|^2 peak at the resonance.

    Marches outward from the peak for the two |T|^2 = 1/2 crossings.
    Limits default to the resonance's zone interval (capped above the
    top zone edge); pass the neighboring resonance energies to keep an
    overlapping neighbor's shoulder from being mistaken for a crossing.
    Returns None when either side never dips below 1/2 before its limit,
    which is how strongly overlapping broad peaks present themselves.
    """
    if settings is None:
        settings = SearchSettings()
    margin = settings.singular_margin * cfg.m
    zlo, zhi = zone_interval(res.zone, cfg)
    if math.isinf(zhi):
        zhi = max(res.energy, zlo) + _OPEN_ZONE_SPAN * cfg.m
    if lo_limit is None:
        lo_limit = zlo + margin
    if hi_limit is None:
        hi_limit = zhi - margin
    step = (zhi - zlo) / settings.grid_points_per_zone
    left = _half_crossing(cfg, res.energy, lo_limit, -step, settings)
    if left is None:
        return None
    right = _half_crossing(cfg, res.energy, hi_limit, step, settings)
    if right is None:
        return None
    return right - left


def attach_widths(resonances: "list[Resonance] | tuple[Resonance, ...]",
                  cfg: PotentialConfig,
                  settings: SearchSettings | None = None) -> list[Resonance]:
    """Copy of the resonances with fwhm filled in, sorted by energy.

    Within each zone the half-maximum march for one resonance is fenced
    by its neighbors' energies.
    """
    if settings is None:
        settings = SearchSettings()
    by_zone: dict[Zone, list[Resonance]] = {}
    for r in resonances:
        by_zone.setdefault(r.zone, []).append(r)
    out: list[Resonance] = []
    for zone_group in by_zone.values():
        zone_group.sort(key=lambda r: r.energy)
        for i, r in enumerate(zone_group):
            lo_limit = zone_group[i - 1].energy if i > 0 else None
            hi_limit = zone_group[i + 1].energy if i + 1 < len(zone_group) else None
            width = estimate_fwhm(r, cfg, settings,
                                  lo_limit=lo_limit, hi_limit=hi_limit)
            out.append(replace(r, fwhm=width))
    return sorted(out, key=lambda r: r.energy)
