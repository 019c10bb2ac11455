"""Command-line driver.

Subcommands:
    closure     expand the point set and emit it as JSON, CSV or SVG
    check-ring  trace/norm ring test for the lattice of two directions
    classify    full order classification (from directions or from z)
    construct   ring-producing direction pair from a rational cosine
    contract    four-direction contraction sequence
    density     empirical window-filling measurement
    identities  the twelve base-intersection identities behind the lattice proof

Reports are deterministic UTF-8 JSON on stdout; CSV and SVG renderings go
to --out. Exit codes: 0 success, 1 domain error (reported as JSON on
stdout), 2 usage error. ORIGAMI_MAX_POINTS overrides the closure point cap.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from . import serialize, svg
from .closure import run_closure, six_identities_check
from .density import contraction_sequence, expand_for_density, measure_density
from .errors import OrigamiError, UsageError
from .parsing import (parse_direction_list, parse_point, parse_rational,
                      parse_window)
from .ringcheck import classify_order, compute_z, construct_from_cos, ring_predicate

DEFAULT_MAX_POINTS = 100_000


def _max_points(override: Optional[int]) -> int:
    if override is not None:
        return override
    env = os.environ.get("ORIGAMI_MAX_POINTS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"ORIGAMI_MAX_POINTS is not an integer: {env!r}")
    return DEFAULT_MAX_POINTS


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="origami",
        description="exact origami point-set constructions and their ring structure",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("closure", help="expand the intersection closure")
    p.add_argument("--dirs", required=True, help="comma-separated direction specs")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--max-points", type=int, default=None)
    p.add_argument("--format", choices=("json", "csv", "svg"), default="json")
    p.add_argument("--out", help="output path (required for csv/svg)")

    p = sub.add_parser("check-ring", help="is the two-direction lattice a ring")
    p.add_argument("--dirs", required=True, help="u,v (the real axis is implied)")

    p = sub.add_parser("classify", help="classify the lattice against the maximal order")
    p.add_argument("--dirs", help="u,v (the real axis is implied)")
    p.add_argument("--z", help='lattice generator as "re,im" scalar literals')

    p = sub.add_parser("construct", help="ring-producing pair from cos(alpha)=s/t")
    p.add_argument("--cos", required=True, help="fraction s/t with 0 < s < t")

    p = sub.add_parser("contract", help="four-direction contraction sequence")
    p.add_argument("--dirs", required=True)
    p.add_argument("--steps", type=int, default=3)
    p.add_argument("--svg", help="also render the trace to this path")

    p = sub.add_parser("density", help="measure window filling of the closure")
    p.add_argument("--dirs", required=True)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--window", default="0,0,1,1", help="x0,y0,x1,y1 (rationals)")
    p.add_argument("--grid", type=int, default=32)
    p.add_argument("--precision", type=int, default=128)
    p.add_argument("--max-points", type=int, default=None)
    p.add_argument("--svg", help="also render in-window points to this path")

    p = sub.add_parser("identities", help="check the six proof identities")
    p.add_argument("--dirs", required=True, help="u,v (the real axis is implied)")
    return ap


def _two_directions(spec: str):
    dirs = parse_direction_list(spec)
    if len(dirs) != 2:
        raise UsageError("expected exactly two directions u,v")
    return dirs


def _emit(payload: dict) -> None:
    sys.stdout.write(serialize.to_json(payload))


def _write(path: str, content: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(content)


def _cmd_closure(args) -> int:
    dirs = parse_direction_list(args.dirs)
    if args.depth < 0:
        raise UsageError("depth must be nonnegative")
    state = run_closure(dirs, args.depth, _max_points(args.max_points))
    if args.format == "json":
        _emit(serialize.closure_report(state))
        return 0
    if not args.out:
        raise UsageError(f"--format {args.format} requires --out")
    if args.format == "csv":
        _write(args.out, serialize.closure_csv(state))
    else:
        _write(args.out, svg.closure_svg(state))
    _emit({"written": args.out, "point_count": len(state.points),
           "truncated": state.truncated})
    return 0


def _cmd_check_ring(args) -> int:
    u, v = _two_directions(args.dirs)
    z = compute_z(u, v)
    _emit(serialize.ring_predicate_json(ring_predicate(z)))
    return 0


def _cmd_classify(args) -> int:
    if bool(args.dirs) == bool(args.z):
        raise UsageError("classify needs exactly one of --dirs or --z")
    if args.dirs:
        u, v = _two_directions(args.dirs)
        report = classify_order(compute_z(u, v), u, v)
    else:
        report = classify_order(parse_point(args.z))
    _emit(serialize.order_report_json(report))
    return 0


def _cmd_construct(args) -> int:
    frac = parse_rational(args.cos)
    if frac.denominator == 1:
        raise UsageError("--cos must be a proper fraction s/t")
    b = construct_from_cos(frac.numerator, frac.denominator)
    _emit(serialize.beta_construction_json(b))
    return 0


def _cmd_contract(args) -> int:
    dirs = parse_direction_list(args.dirs)
    trace = contraction_sequence(dirs, args.steps)
    if args.svg:
        _write(args.svg, svg.contraction_svg(trace))
    _emit(serialize.contraction_json(trace))
    return 0


def _cmd_density(args) -> int:
    dirs = parse_direction_list(args.dirs)
    window = parse_window(args.window)
    report = measure_density(
        dirs,
        args.depth,
        window=window,
        resolution=args.grid,
        precision_bits=args.precision,
        max_points=_max_points(args.max_points),
    )
    if args.svg:
        _, _, (fx, fy), _ = expand_for_density(
            dirs, args.depth, _max_points(args.max_points))
        _write(args.svg, svg.density_svg(fx, fy, window, args.grid))
    _emit(serialize.density_json(report))
    return 0


def _cmd_identities(args) -> int:
    u, v = _two_directions(args.dirs)
    _emit(serialize.identity_report_json(six_identities_check(u, v)))
    return 0


_HANDLERS = {
    "closure": _cmd_closure,
    "check-ring": _cmd_check_ring,
    "classify": _cmd_classify,
    "construct": _cmd_construct,
    "contract": _cmd_contract,
    "density": _cmd_density,
    "identities": _cmd_identities,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except OrigamiError as exc:
        _emit(serialize.error_json(type(exc).__name__, str(exc)))
        return 1


if __name__ == "__main__":
    sys.exit(main())
