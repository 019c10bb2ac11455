"""Canonical report emission: JSON, CSV.

All JSON output is byte stable: keys sorted, two-space indent, rationals
rendered as "p" or "p/q" strings and quadratic scalars in the same literal
grammar the parsers accept, so every report value round-trips.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .closure import ClosureState, IdentityReport, LatticeReport
from .density import ContractionTrace, DensityReport
from .field import RealQuad
from .geometry import Direction, Point
from .ringcheck import BetaConstruction, OrderReport, RingPredicateResult


def scalar_str(v) -> str:
    if isinstance(v, RealQuad):
        return str(v)
    if isinstance(v, Fraction):
        return str(RealQuad(v))
    return str(v)


def point_json(p: Point) -> dict:
    return {"re": scalar_str(p.re), "im": scalar_str(p.im)}


def direction_str(d: Direction) -> str:
    return f"vec:({d.vec.re},{d.vec.im})"


def to_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _sorted_point_indices(state: ClosureState) -> list[int]:
    order = sorted(
        range(len(state.points)),
        key=lambda i: (state.points[i].re.key(), state.points[i].im.key()),
    )
    return order


def closure_report(state: ClosureState) -> dict:
    order = _sorted_point_indices(state)
    return {
        "directions": [direction_str(d) for d in state.directions],
        "radicand": state.radicand,
        "depth": state.depth,
        "truncated": state.truncated,
        "point_count": len(state.points),
        "points": [
            dict(point_json(state.points[i]),
                 depth=state.depth_introduced[i])
            for i in order
        ],
    }


def closure_csv(state: ClosureState) -> str:
    lines = ["re_rat,re_irr,im_rat,im_irr,radicand,depth_introduced"]
    for i in _sorted_point_indices(state):
        p = state.points[i]
        lines.append(",".join([
            scalar_str(p.re.rat),
            scalar_str(p.re.irr),
            scalar_str(p.im.rat),
            scalar_str(p.im.irr),
            str(state.radicand),
            str(state.depth_introduced[i]),
        ]))
    return "\n".join(lines) + "\n"


def lattice_report_json(report: LatticeReport) -> dict:
    return {
        "z": point_json(report.z),
        "all_integer": report.all_integer,
        "violations": [point_json(p) for p in report.violations],
        "coordinate_count": len(report.coords),
    }


def identity_report_json(report: IdentityReport) -> dict:
    return {
        "u": direction_str(report.u),
        "v": direction_str(report.v),
        "z": point_json(report.z),
        "all_passed": report.all_passed,
        "checks": [
            {
                "identity": c.label,
                "actual": point_json(c.actual),
                "expected": point_json(c.expected),
                "passed": c.passed,
            }
            for c in report.checks
        ],
    }


def ring_predicate_json(result: RingPredicateResult) -> dict:
    return {
        "z": point_json(result.z),
        "k": scalar_str(result.k),
        "m": scalar_str(result.m),
        "is_ring": result.is_ring,
        "z_squared_coords": {
            "a": scalar_str(result.z2_coords_a),
            "b": scalar_str(result.z2_coords_b),
        },
    }


def order_report_json(report: OrderReport) -> dict:
    def route(r) -> dict:
        return {
            "applicable": r.applicable,
            "verdict": r.verdict,
            "detail": {k: _jsonable(v) for k, v in r.detail.items()},
        }

    out = {
        "z": point_json(report.z),
        "k": scalar_str(report.k),
        "m": scalar_str(report.m),
        "is_ring": report.is_ring,
        "discriminant": (scalar_str(report.discriminant)
                         if report.discriminant is not None else None),
        "y": report.decomposition.cofactor if report.decomposition else None,
        "d": report.decomposition.core if report.decomposition else None,
        "field": report.field_label,
        "verdict": report.verdict,
        "routes": {
            "lemma": route(report.route_lemma),
            "trig": route(report.route_trig),
        },
        "warnings": list(report.warnings),
    }
    return out


def beta_construction_json(b: BetaConstruction) -> dict:
    return {
        "s": b.s,
        "t": b.t,
        "z": point_json(b.z),
        "u": direction_str(b.u_dir),
        "v": direction_str(b.v_dir),
        "k": b.k,
        "m": b.m,
    }


def contraction_json(trace: ContractionTrace) -> dict:
    return {
        "directions": [direction_str(d) for d in trace.directions],
        "p0": point_json(trace.p0),
        "ratio": scalar_str(trace.ratio),
        "steps": len(trace.entries),
        "entries": [
            {
                "p": point_json(e.p),
                "s": point_json(e.s),
                "r": point_json(e.r),
            }
            for e in trace.entries
        ],
        "ok": trace.ok,
        "violations": list(trace.violations),
    }


def density_json(report: DensityReport) -> dict:
    return {
        "window": [scalar_str(v) for v in report.window],
        "depth": report.depth,
        "grid_resolution": report.grid_resolution,
        "point_count": report.point_count,
        "in_window": report.in_window,
        "empty_cell_fraction": round(report.empty_cell_fraction, 12),
        "max_empty_block": report.max_empty_block,
        "max_gap": round(report.max_gap, 12),
        "truncated": report.truncated,
        "mode": report.mode,
        "backend": report.backend,
    }


def error_json(kind: str, message: str) -> dict:
    return {"error": {"type": kind, "message": message}}


def _jsonable(v):
    if isinstance(v, (RealQuad, Fraction)):
        return scalar_str(v)
    if isinstance(v, Point):
        return point_json(v)
    return v
