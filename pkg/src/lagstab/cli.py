"""Command-line front end: analyze / sweep / oracle / volume.

Exit codes: 0 for a stable verdict (or oracle agreement), 10 for an unstable
verdict (or oracle disagreement), 2 for input errors.  Rational syntax p/q
routes inputs to the exact track; decimal literals route to the float track.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool

from . import oracle as oracle_mod
from . import report as report_mod
from .errors import LagstabError
from .orbit import (
    OrbitSpec,
    metric_hyperbolic,
    orbit_from_radii,
    orbit_from_tanh_sq,
    volume_euclidean,
    volume_hyperbolic,
)
from .scalars import EXACT, FLOAT, all_exact, format_scalar, parse_scalar
from .stability import DEFAULT_ZERO_BAND, CERTIFIED_UNSTABLE, analyze

EXIT_STABLE = 0
EXIT_UNSTABLE = 10
EXIT_INPUT_ERROR = 2


@dataclass
class RunConfig:
    arithmetic: str | None = None  # None = infer from input literals
    mode_bound_override: object = None
    workers: int = 1
    output_format: str = "text"
    zero_band: float = DEFAULT_ZERO_BAND
    seed: int | None = None


def _parse_list(text: str):
    return [parse_scalar(tok) for tok in text.split(",") if tok.strip()]


def _coerce_track(values, arithmetic):
    """Apply the arithmetic policy to parsed scalars."""
    if arithmetic == EXACT and not all_exact(values):
        raise LagstabError(
            "exact arithmetic requested but a decimal literal was given; use p/q syntax"
        )
    if arithmetic == FLOAT:
        return [float(v) for v in values]
    return values


def parse_orbit(args, config: RunConfig) -> OrbitSpec:
    if args.radii and args.simplex:
        raise LagstabError("give either --radii or --simplex/--t, not both")
    if args.radii:
        radii = _coerce_track(_parse_list(args.radii), config.arithmetic)
        return orbit_from_radii(len(radii), radii)
    if args.simplex:
        if args.t is None:
            raise LagstabError("--simplex requires --t <tanh^2 r>")
        simplex = _parse_list(args.simplex)
        t = parse_scalar(args.t)
        coerced = _coerce_track(simplex + [t], config.arithmetic)
        return orbit_from_tanh_sq(len(simplex), coerced[-1], coerced[:-1])
    raise LagstabError("an orbit requires --radii or --simplex/--t")


def _add_orbit_args(p):
    p.add_argument("--radii", help="comma-separated circle radii r_1,...,r_n")
    p.add_argument("--simplex", help="comma-separated simplex point s_1,...,s_n")
    p.add_argument("--t", help="tanh^2 of the geodesic radius (with --simplex)")


def _add_config_args(p):
    p.add_argument("--arithmetic", choices=[EXACT, FLOAT], default=None)
    p.add_argument("--output", choices=["json", "csv", "text"], default="text")
    p.add_argument("--workers", type=int, default=int(os.environ.get("LAGSTAB_WORKERS", "1")))
    p.add_argument("--bound", default=None, help="enlarge-only override of the mode bound")
    p.add_argument("--zero-band", type=float, default=DEFAULT_ZERO_BAND)
    p.add_argument("--seed", type=int, default=None)


def _config_from(args) -> RunConfig:
    return RunConfig(
        arithmetic=args.arithmetic,
        mode_bound_override=parse_scalar(args.bound) if args.bound else None,
        workers=max(1, args.workers),
        output_format=args.output,
        zero_band=args.zero_band,
        seed=args.seed,
    )


# ---------------------------------------------------------------------------
# analyze


def cmd_analyze(args) -> int:
    config = _config_from(args)
    orbit = parse_orbit(args, config)
    rep = analyze(orbit, bound_override=config.mode_bound_override, zero_band=config.zero_band)
    if config.output_format == "json":
        print(report_mod.dumps_json(report_mod.report_json_dict(rep, orbit)))
    else:
        print(report_mod.report_text(rep, orbit))
    return EXIT_UNSTABLE if rep.verdict == CERTIFIED_UNSTABLE else EXIT_STABLE


# ---------------------------------------------------------------------------
# sweep


def _simplex_compositions(n: int, total: int):
    """All (k_1,...,k_n) with k_i >= 1 and sum k_i = total, lexicographic."""
    if n == 1:
        yield (total,)
        return
    for k in range(1, total - n + 2):
        for rest in _simplex_compositions(n - 1, total - k):
            yield (k,) + rest


def _sweep_point(task):
    n, ks, denom, t, bound_override, zero_band = task
    simplex = [Fraction(k, denom) for k in ks]
    if not isinstance(t, Fraction):
        simplex = [float(s) for s in simplex]
    orbit = orbit_from_tanh_sq(n, t, simplex)
    rep = analyze(orbit, bound_override=bound_override, zero_band=zero_band)
    return report_mod.sweep_csv_record(orbit, rep)


def cmd_sweep(args) -> int:
    config = _config_from(args)
    n = args.n
    resolution = args.resolution
    if n < 1:
        raise LagstabError(f"n must be >= 1, got {n}")
    if resolution < 2:
        raise LagstabError(f"grid resolution must be >= 2, got {resolution}")

    if args.t_values:
        t_values = _parse_list(args.t_values)
    elif args.t_resolution:
        t_values = [Fraction(j, args.t_resolution + 1) for j in range(1, args.t_resolution + 1)]
    else:
        raise LagstabError("sweep requires --t-values or --t-resolution")
    t_values = _coerce_track(t_values, config.arithmetic)
    for t in t_values:
        if not 0 < t < 1:
            raise LagstabError(f"t values must lie in (0, 1), got {t}")

    denom = resolution + 1
    track = EXACT if all_exact(t_values) else FLOAT
    tasks = [
        (n, ks, denom, t, config.mode_bound_override, config.zero_band)
        for ks in _simplex_compositions(n, denom)
        for t in t_values
    ]
    sys.stdout.write(report_mod.sweep_csv_header(n, track) + "\n")
    if config.workers > 1:
        with Pool(config.workers) as pool:
            for record in pool.map(_sweep_point, tasks, chunksize=32):
                sys.stdout.write(record + "\n")
    else:
        for task in tasks:
            sys.stdout.write(_sweep_point(task) + "\n")
    return EXIT_STABLE


# ---------------------------------------------------------------------------
# oracle


def cmd_oracle(args) -> int:
    from .stability import q_form

    config = _config_from(args)
    orbit = parse_orbit(args, config)
    mode = tuple(int(m) for m in args.mode.split(","))
    u = oracle_mod.TrigMonomial(mode=mode, phase=args.phase)

    qv = q_form(orbit, mode)
    sh4 = orbit.sinh_sq * orbit.sinh_sq
    spectral = sh4 * oracle_mod.second_variation_spectral(orbit, u)
    quadrature = float(sh4) * oracle_mod.second_variation_quadrature(orbit, u, grid=args.grid)

    scale = 1.0 + abs(float(qv))
    dev_spec = abs(float(qv) - float(spectral))
    dev_quad = abs(float(qv) - quadrature)
    if orbit.track == EXACT:
        agree = qv == spectral and dev_quad <= 1e-10 * scale
    else:
        agree = dev_spec <= 1e-10 * scale and dev_quad <= 1e-10 * scale

    if config.output_format == "json":
        print(
            report_mod.dumps_json(
                {
                    "q_form": report_mod._scalar_json(qv),
                    "spectral": report_mod._scalar_json(spectral),
                    "quadrature": quadrature,
                    "deviation_spectral": dev_spec,
                    "deviation_quadrature": dev_quad,
                    "agree": agree,
                }
            )
        )
    else:
        print(f"q_form:            {qv}")
        print(f"sinh^4 r * spectral:   {spectral}")
        print(f"sinh^4 r * quadrature: {quadrature}")
        print(f"deviations: spectral {dev_spec:.3e}, quadrature {dev_quad:.3e}")
        print(f"agreement: {agree}")
    return EXIT_STABLE if agree else EXIT_UNSTABLE


# ---------------------------------------------------------------------------
# volume


def cmd_volume(args) -> int:
    config = _config_from(args)
    orbit = parse_orbit(args, config)
    vol_h = volume_hyperbolic(orbit)
    vol_e = volume_euclidean(orbit)
    det = metric_hyperbolic(orbit).det()
    det_route = (2.0 * math.pi) ** orbit.n * math.sqrt(float(det))
    cosh = math.sqrt(float(orbit.cosh_sq))
    if config.output_format == "json":
        print(
            report_mod.dumps_json(
                {
                    "volume_hyperbolic": vol_h,
                    "volume_euclidean": vol_e,
                    "cosh_ratio": vol_h / vol_e,
                    "cosh_r": cosh,
                    "det_cross_check": det_route,
                }
            )
        )
    else:
        print(f"hyperbolic volume: {vol_h!r}")
        print(f"euclidean volume:  {vol_e!r}")
        print(f"ratio (= cosh r):  {vol_h / vol_e!r} vs cosh r = {cosh!r}")
        print(f"(2 pi)^n sqrt(det G1) cross-check: {det_route!r}")
    return EXIT_STABLE


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lagstab",
        description="Certified Hamiltonian stability of Lagrangian torus orbits in CH^n",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="certified stability verdict for one orbit")
    _add_orbit_args(p)
    _add_config_args(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="grid sweep over the moment simplex")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--resolution", type=int, required=True, help="interior grid points per simplex edge")
    p.add_argument("--t-values", help="comma-separated t values")
    p.add_argument("--t-resolution", type=int, help="interior grid points for t")
    _add_config_args(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("oracle", help="three-way second-variation cross-check")
    _add_orbit_args(p)
    p.add_argument("--mode", required=True, help="comma-separated integer mode")
    p.add_argument("--phase", choices=["cos", "sin"], default="cos")
    p.add_argument("--grid", type=int, default=None)
    _add_config_args(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("volume", help="orbit volumes and consistency checks")
    _add_orbit_args(p)
    _add_config_args(p)
    p.set_defaults(func=cmd_volume)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LagstabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
