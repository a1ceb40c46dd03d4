"""Command-line front end.

Subcommands
-----------
transmission   |T|^2 curve over an energy window, written as CSV
resonances     zone-by-zone resonance report, written as JSON
sweep          one curve per value of a swept width, plus a manifest
verify         randomized invariant suite

Exit codes: 0 success, 1 failed verification or computation, 2 usage
error, 3 invalid potential configuration.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .core import ZONE_ORDER, PotentialConfig, Zone, zone_interval
from .emit import (
    SWEEP_PARAMS,
    run_sweep,
    transmission_rows,
    write_curve_csv,
    write_json,
    zone_report,
)
from .errors import ConfigError, DoubleBarrierError
from .resonance import SearchSettings
from .svg import render_curve_svg
from .verify import run_verification

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_CONFIG = 3

_CONFIG_KEYS = ("mass", "v_plus", "v_minus", "a_plus", "a_minus")
_ZONE_CHOICES = tuple(z.value for z in ZONE_ORDER) + ("all",)


class UsageError(Exception):
    """Bad flag combination or value, reported with exit code 2."""


def _add_potential_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("potential")
    group.add_argument("--v-plus", type=float, help="barrier height")
    group.add_argument("--v-minus", type=float, help="floor height")
    group.add_argument("--a-plus", type=float, help="width of each barrier")
    group.add_argument("--a-minus", type=float, help="half-width of the floor")
    group.add_argument("--mass", type=float, help="fermion mass (default 1)")
    group.add_argument("--config", metavar="PATH",
                       help="JSON file with keys mass, v_plus, v_minus, "
                            "a_plus, a_minus; flags override it")


def _build_config(args: argparse.Namespace) -> PotentialConfig:
    values: dict = {"mass": 1.0}
    if args.config:
        try:
            data = json.loads(Path(args.config).read_text())
        except OSError as exc:
            raise UsageError(f"cannot read config file: {exc}") from None
        except json.JSONDecodeError as exc:
            raise UsageError(f"config file is not valid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise UsageError("config file must hold a JSON object")
        unknown = sorted(set(data) - set(_CONFIG_KEYS))
        if unknown:
            raise UsageError(
                f"unknown config keys {unknown}; expected {list(_CONFIG_KEYS)}"
            )
        values.update(data)
    for key in _CONFIG_KEYS:
        flag_value = getattr(args, key)
        if flag_value is not None:
            values[key] = flag_value
    missing = [k for k in ("v_plus", "v_minus", "a_plus", "a_minus")
               if k not in values]
    if missing:
        raise UsageError(
            "missing potential parameters: "
            + ", ".join("--" + k.replace("_", "-") for k in missing)
        )
    return PotentialConfig(
        v_plus=float(values["v_plus"]),
        v_minus=float(values["v_minus"]),
        a_plus=float(values["a_plus"]),
        a_minus=float(values["a_minus"]),
        m=float(values["mass"]),
    )


def _window(args: argparse.Namespace, cfg: PotentialConfig) -> tuple[float, float]:
    e_min = args.e_min if args.e_min is not None else 1.01 * cfg.m
    e_max = args.e_max if args.e_max is not None else cfg.v_plus + 4.0 * cfg.m
    return e_min, e_max


def _expand_zones(selected: "list[str] | None") -> list[Zone]:
    if not selected:
        selected = ["all"]
    if "all" in selected:
        return list(ZONE_ORDER)
    by_value = {z.value: z for z in ZONE_ORDER}
    picked = {by_value[name] for name in selected}
    return [z for z in ZONE_ORDER if z in picked]


def _cmd_transmission(args: argparse.Namespace) -> int:
    cfg = _build_config(args)
    e_min, e_max = _window(args, cfg)
    rows = transmission_rows(cfg, e_min, e_max, args.points,
                             workers=args.threads)
    out = write_curve_csv(Path(args.out or "transmission.csv"), rows)
    print(f"wrote {len(rows)} rows to {out}")
    if args.svg:
        Path(args.svg).write_text(
            render_curve_svg([r.e for r in rows], [r.t2 for r in rows], cfg)
        )
        print(f"wrote {args.svg}")
    for zone in ZONE_ORDER:
        lo, hi = zone_interval(zone, cfg)
        hi_text = "inf" if math.isinf(hi) else f"{hi:.12g}"
        print(f"zone {zone.value}: ({lo:.12g}, {hi_text})")
    return EXIT_OK


def _cmd_resonances(args: argparse.Namespace) -> int:
    cfg = _build_config(args)
    zones = _expand_zones(args.zone)
    e_max = args.e_max if args.e_max is not None else cfg.v_plus + 3.0 * cfg.m
    if Zone.ABOVE_BARRIER in zones and not e_max > cfg.v_plus + cfg.m:
        raise UsageError(
            f"--e-max must exceed v_plus + m = {cfg.v_plus + cfg.m:g} "
            "to search the above-barrier zone"
        )
    settings = SearchSettings(grid_points_per_zone=args.grid_points)
    report = zone_report(cfg, zones, e_max, settings)
    out = write_json(Path(args.out or "resonances.json"), report)
    total = 0
    for entry in report["zones"]:
        n = len(entry["resonances"])
        total += n
        print(f"{entry['name']}: {n} resonance{'s' if n != 1 else ''}")
    print(f"wrote {total} resonances to {out}")
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    cfg = _build_config(args)
    e_min, e_max = _window(args, cfg)
    manifest = run_sweep(
        cfg,
        args.param,
        args.start,
        args.stop,
        args.frames,
        args.out_dir,
        e_min,
        e_max,
        args.points,
        with_resonances=args.with_resonances,
        workers=args.threads,
    )
    print(f"wrote {len(manifest['frames'])} frames to {args.out_dir}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = _build_config(args)
    report = run_verification(
        cfg,
        samples=args.samples,
        seed=args.seed,
        e_min=args.e_min,
        e_max=args.e_max,
        tolerance=args.tolerance,
    )
    text = report.render()
    print(text)
    if args.out:
        Path(args.out).write_text(text + "\n")
    return EXIT_OK if report.passed else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dirac-double-barrier",
        description="Scattering on a double square barrier with an elevated floor",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_trans = sub.add_parser("transmission", help="write a |T|^2 curve as CSV")
    _add_potential_args(p_trans)
    p_trans.add_argument("--e-min", type=float, help="window start (default 1.01 m)")
    p_trans.add_argument("--e-max", type=float,
                         help="window end (default v_plus + 4 m)")
    p_trans.add_argument("--points", type=int, default=2000,
                         help="grid points (default 2000)")
    p_trans.add_argument("--out", metavar="PATH",
                         help="CSV path (default transmission.csv)")
    p_trans.add_argument("--svg", metavar="PATH",
                         help="also render the curve as SVG")
    p_trans.add_argument("--threads", type=int, default=1,
                         help="parallel workers (default 1)")
    p_trans.set_defaults(handler=_cmd_transmission)

    p_res = sub.add_parser("resonances", help="write a resonance report as JSON")
    _add_potential_args(p_res)
    p_res.add_argument("--zone", action="append", choices=_ZONE_CHOICES,
                       help="zone to search, repeatable (default all)")
    p_res.add_argument("--e-max", type=float,
                       help="above-barrier cutoff (default v_plus + 3 m)")
    p_res.add_argument("--grid-points", type=int, default=4000,
                       help="scan points per zone (default 4000)")
    p_res.add_argument("--out", metavar="PATH",
                       help="JSON path (default resonances.json)")
    p_res.set_defaults(handler=_cmd_resonances)

    p_sweep = sub.add_parser("sweep", help="curves for a swept width")
    _add_potential_args(p_sweep)
    p_sweep.add_argument("--param", required=True, choices=SWEEP_PARAMS,
                         help="which width to sweep")
    p_sweep.add_argument("--from", dest="start", type=float, required=True,
                         metavar="START", help="first swept value")
    p_sweep.add_argument("--to", dest="stop", type=float, required=True,
                         metavar="STOP", help="last swept value")
    p_sweep.add_argument("--frames", type=int, required=True,
                         help="number of evenly spaced values")
    p_sweep.add_argument("--e-min", type=float, help="window start (default 1.01 m)")
    p_sweep.add_argument("--e-max", type=float,
                         help="window end (default v_plus + 4 m)")
    p_sweep.add_argument("--points", type=int, default=1000,
                         help="grid points per frame (default 1000)")
    p_sweep.add_argument("--out-dir", default="sweep", metavar="DIR",
                         help="output directory (default sweep)")
    p_sweep.add_argument("--with-resonances", action="store_true",
                         help="also write a resonance report per frame")
    p_sweep.add_argument("--threads", type=int, default=1,
                         help="parallel workers (default 1)")
    p_sweep.set_defaults(handler=_cmd_sweep)

    p_verify = sub.add_parser("verify", help="run the randomized invariant suite")
    _add_potential_args(p_verify)
    p_verify.add_argument("--samples", type=int, default=10_000,
                          help="energy samples (default 10000)")
    p_verify.add_argument("--seed", type=int, default=0,
                          help="generator seed (default 0)")
    p_verify.add_argument("--e-min", type=float,
                          help="window start (default 1.001 m)")
    p_verify.add_argument("--e-max", type=float,
                          help="window end (default v_plus + 4 m)")
    p_verify.add_argument("--tolerance", type=float, default=1e-10,
                          help="worst-deviation bound (default 1e-10)")
    p_verify.add_argument("--out", metavar="PATH",
                          help="also write the report to a file")
    p_verify.set_defaults(handler=_cmd_verify)
    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed its message; --help exits 0
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DoubleBarrierError as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return EXIT_FAILURE


def run() -> None:
    raise SystemExit(main())
