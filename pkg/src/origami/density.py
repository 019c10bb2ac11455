"""Four-direction machinery: contraction sequences and empirical window density.

The contraction construction takes directions ordered 0 < alpha < beta <
gamma < pi together with the real axis, then alternates three intersections
to produce nested points p_i on the line of the smallest angle and s_i on
the real axis. Consecutive points are exact scalar contractions of their
predecessors, so the similar-triangle structure is checked by exact equality
rather than numerically.

Density is measured, not proven: the closure is expanded to a depth, points
are binned into a grid over a window, and the report carries three empirical
surrogates. Cells are closed regions: a point lying on a shared cell
boundary counts for every touching cell, so an "empty cell" certifies a hole
of positive area. max_gap is the fill distance at grid resolution (the
largest distance from a cell center to the nearest constructed point, in
window units); it can only shrink as depth grows.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np
from mpmath import mp, mpf

from . import _kernel
from .closure import expand, initial_state
from .errors import BadOrdering, MixedRadicand
from .field import RealQuad
from .geometry import Direction, P_ONE, P_ZERO, Point, cross, intersect

DEDUP_QUANT = 2.0 ** -40
_BOUNDARY_TOL = 1e-9  # in cell units, for float-mode closed-cell binning


def float_point(p: Point, precision_bits: int = 128):
    """Evaluate a point's coordinates as binary floats of the given precision.

    Returns an mpmath (x, y) pair computed with precision_bits working
    precision (53-bit hardware floats cannot hold the default 128).
    """
    if precision_bits < 64:
        raise ValueError("precision_bits must be at least 64")
    with mp.workprec(precision_bits):
        return (_eval_rq(p.re), _eval_rq(p.im))


def _eval_rq(v: RealQuad):
    x = mpf(v.rat.numerator) / v.rat.denominator
    if v.irr != 0:
        x += mpf(v.irr.numerator) / v.irr.denominator * mp.sqrt(v.radicand)
    return x


# ---------------------------------------------------------------------------
# contraction sequences
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ContractionEntry:
    p: Point
    s: Point
    r: Point


@dataclass(frozen=True)
class ContractionTrace:
    directions: tuple[Direction, ...]  # ordered: 1, u, v, w
    p0: Point
    entries: tuple[ContractionEntry, ...]
    ratio: RealQuad
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _angle_sort(directions: Sequence[Direction]) -> list[Direction]:
    """Order as (real axis, then ascending angle in (0, pi)).

    Non-horizontal canonical vectors are (t, 1) with t = cot(angle), which
    decreases strictly on (0, pi), so sorting by descending t is sorting by
    ascending angle; no inverse trigonometry is involved.
    """
    axis = [d for d in directions if d.is_horizontal()]
    if not axis:
        raise BadOrdering("the direction set must contain the real axis")
    rest = [d for d in directions if not d.is_horizontal()]
    rest.sort(key=lambda d: d.vec.re, reverse=True)
    return axis + rest


def contraction_sequence(directions: Sequence[Direction],
                         steps: int) -> ContractionTrace:
    """Build the nested point sequences for a four-direction set.

    Requires exactly four pairwise distinct directions including the real
    axis and steps >= 1. Interval and similarity invariants are verified
    exactly; failures are reported in the trace rather than raised, since
    extreme angle configurations can leave the unit interval legitimately.
    """
    dirs = list(directions)
    if len(dirs) != 4:
        raise BadOrdering(f"need exactly 4 directions, got {len(dirs)}")
    if len(set(dirs)) != 4:
        raise BadOrdering("directions must be pairwise distinct")
    if steps < 1:
        raise BadOrdering("steps must be >= 1")
    one, u, v, w = _angle_sort(dirs)

    p0 = intersect(u, w, P_ZERO, P_ONE)
    violations: list[str] = []

    def lam(pt: Point) -> RealQuad:  # parameter along L_u(0)
        return pt.im / u.vec.im

    def nu(pt: Point) -> RealQuad:  # parameter along L_v(0)
        return pt.im / v.vec.im

    entries = []
    prev_p = p0
    prev_lam = lam(p0)
    prev_sigma = RealQuad(1)
    ratio: Optional[RealQuad] = None
    r_prev = intersect(one, v, p0, P_ZERO)
    prev_r = r_prev
    prev_nu_val = nu(r_prev)
    if prev_nu_val.sign() <= 0:
        violations.append("r_0 is not on the positive side of L_v(0)")
    prev_nu = prev_nu_val
    for i in range(1, steps + 1):
        p_i = intersect(u, w, P_ZERO, prev_r)
        s_i = intersect(one, w, P_ZERO, prev_r)
        r_i = intersect(one, v, p_i, P_ZERO)
        if p_i.is_zero():
            violations.append(f"p_{i} degenerated to 0")
            break
        if s_i.is_zero():
            violations.append(f"s_{i} degenerated to 0")
            break
        li = lam(p_i)
        si = s_i.re
        if not s_i.im.is_zero():
            violations.append(f"s_{i} left the real axis")
        if not (0 < li < prev_lam):
            violations.append(f"p_{i} is not strictly between 0 and p_{i-1}")
        if not (0 < si < prev_sigma):
            violations.append(f"s_{i} is not strictly between 0 and s_{i-1}")
        ni = nu(r_i)
        if not (0 < ni < prev_nu):
            violations.append(f"r_{i} is not strictly between 0 and r_{i-1}")
        if ratio is None:
            ratio = li / prev_lam
        else:
            if p_i != prev_p.scale(ratio):
                violations.append(f"contraction ratio broke at p_{i}")
            if si != prev_sigma * ratio:
                violations.append(f"contraction ratio broke at s_{i}")
        # similar triangles (0, p, 1) and (0, p_i, s_i)
        if p_i.norm2() != p0.norm2() * si * si:
            violations.append(f"triangle at step {i} is not similar to the base")
        if i == 1 and cross(p_i, s_i).is_zero():
            violations.append("p_1 and s_1 are collinear")
        entries.append(ContractionEntry(p=p_i, s=s_i, r=r_i))
        prev_p, prev_lam, prev_sigma, prev_nu, prev_r = p_i, li, si, ni, r_i
    return ContractionTrace(
        directions=(one, u, v, w),
        p0=p0,
        entries=tuple(entries),
        ratio=ratio if ratio is not None else RealQuad(0),
        violations=tuple(violations),
    )


# ---------------------------------------------------------------------------
# density measurement
# ---------------------------------------------------------------------------

_Num = Union[int, float, Fraction]


@dataclass(frozen=True)
class DensityReport:
    window: tuple[Fraction, Fraction, Fraction, Fraction]
    depth: int
    grid_resolution: int
    point_count: int
    in_window: int
    empty_cell_fraction: float
    max_empty_block: int
    max_gap: float
    truncated: bool
    mode: str     # "exact" or "float"
    backend: str  # which kernel backend ran


def _to_fraction(x: _Num) -> Fraction:
    if isinstance(x, float):
        return Fraction(x).limit_denominator(10 ** 12)
    return Fraction(x)


def _floor_exact(v: RealQuad) -> int:
    if v.is_rational():
        return math.floor(v.as_fraction())
    f = math.floor(float(v))
    while v < f:
        f -= 1
    while v >= f + 1:
        f += 1
    return f


def measure_density(
    directions: Sequence[Direction],
    depth: int,
    window: tuple[_Num, _Num, _Num, _Num] = (0, 0, 1, 1),
    resolution: int = 32,
    precision_bits: int = 128,
    max_points: Optional[int] = 100_000,
) -> DensityReport:
    """Expand the closure and measure how it fills a window.

    Runs exactly whenever all directions fit one quadratic field; direction
    sets mixing several square roots fall back to floating point with
    grid-snap deduplication (pitch 2**-40). Hitting the point cap flags the
    report as truncated instead of failing.
    """
    if resolution < 1:
        raise ValueError("resolution must be positive")
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    x0, y0, x1, y1 = (_to_fraction(w) for w in window)
    if x1 <= x0 or y1 <= y0:
        raise ValueError("window must have positive extent")

    mode, pts, (fx, fy), truncated = expand_for_density(
        directions, depth, max_points)
    total = fx.shape[0]
    occupied: set[tuple[int, int]] = set()
    if mode == "exact":
        in_window = _bin_exact(pts, (x0, y0, x1, y1), resolution, occupied)
    else:
        in_window = _bin_float(fx, fy, (x0, y0, x1, y1), resolution, occupied)

    res = resolution
    occ = np.zeros((res, res), dtype=bool)
    for (cx, cy) in occupied:
        occ[cx, cy] = True
    empty_fraction = 1.0 - occ.mean()
    block = _largest_empty_square(occ)
    gap = _fill_distance(fx, fy, (x0, y0, x1, y1), res)
    return DensityReport(
        window=(x0, y0, x1, y1),
        depth=depth,
        grid_resolution=res,
        point_count=total,
        in_window=in_window,
        empty_cell_fraction=float(empty_fraction),
        max_empty_block=int(block),
        max_gap=float(gap),
        truncated=truncated,
        mode=mode,
        backend=_kernel.BACKEND,
    )


def expand_for_density(
    directions: Sequence[Direction],
    depth: int,
    max_points: Optional[int],
):
    """Expand the closure for measurement or rendering.

    Exact mode runs whenever the directions share one quadratic field;
    otherwise the float kernel takes over. Returns
    (mode, exact_points_or_None, (float_x, float_y), truncated).
    """
    try:
        state = initial_state(directions)
    except MixedRadicand:
        state = None
    if state is not None:
        for _ in range(depth):
            state = expand(state, max_points)
        pts = state.points
        fx = np.array([float(p.re) for p in pts])
        fy = np.array([float(p.im) for p in pts])
        return "exact", pts, (fx, fy), state.truncated
    xs = np.array([0.0, 1.0])
    ys = np.array([0.0, 0.0])
    fdirs = [(float(d.vec.re), float(d.vec.im)) for d in directions]
    truncated = False
    for _ in range(depth):
        nx, ny, tr = _kernel.expand_float(
            xs, ys, fdirs, max_points or 0, DEDUP_QUANT)
        xs = np.concatenate([xs, nx])
        ys = np.concatenate([ys, ny])
        truncated = truncated or tr
    return "float", None, (xs, ys), truncated


def _cells_for_coord(t_floor: int, on_boundary: bool, res: int) -> list[int]:
    """Closed-cell indices touched by a coordinate with cell-space floor
    t_floor; a boundary hit belongs to the cell on each side."""
    cells = []
    lo = t_floor - 1 if on_boundary else t_floor
    for c in (lo, t_floor):
        if 0 <= c < res and c not in cells:
            cells.append(c)
    return cells


def _bin_exact(pts, window, res, occupied) -> int:
    x0, y0, x1, y1 = window
    wx = (x1 - x0) / res
    wy = (y1 - y0) / res
    count = 0
    for p in pts:
        tx = (p.re - x0) / wx
        ty = (p.im - y0) / wy
        if tx < 0 or tx > res or ty < 0 or ty > res:
            continue
        fxi = _floor_exact(tx)
        fyi = _floor_exact(ty)
        bx = tx == fxi
        by = ty == fyi
        count += 1
        for cx in _cells_for_coord(fxi, bx, res):
            for cy in _cells_for_coord(fyi, by, res):
                occupied.add((cx, cy))
    return count


def _bin_float(xs, ys, window, res, occupied) -> int:
    x0, y0, x1, y1 = (float(v) for v in window)
    sx = res / (x1 - x0)
    sy = res / (y1 - y0)
    count = 0
    for x, y in zip(xs.tolist(), ys.tolist()):
        tx = (x - x0) * sx
        ty = (y - y0) * sy
        if tx < -_BOUNDARY_TOL or tx > res + _BOUNDARY_TOL:
            continue
        if ty < -_BOUNDARY_TOL or ty > res + _BOUNDARY_TOL:
            continue
        rx = round(tx)
        ry = round(ty)
        bx = abs(tx - rx) <= _BOUNDARY_TOL
        by = abs(ty - ry) <= _BOUNDARY_TOL
        fxi = rx if bx else math.floor(tx)
        fyi = ry if by else math.floor(ty)
        count += 1
        for cx in _cells_for_coord(fxi, bx, res):
            for cy in _cells_for_coord(fyi, by, res):
                occupied.add((cx, cy))
    return count


def _largest_empty_square(occ: np.ndarray) -> int:
    """Side, in cells, of the largest fully-empty axis-aligned square."""
    res = occ.shape[0]
    dp = np.zeros((res + 1, res + 1), dtype=np.int64)
    best = 0
    for i in range(res - 1, -1, -1):
        row = dp[i]
        below = dp[i + 1]
        for j in range(res - 1, -1, -1):
            if occ[i, j]:
                row[j] = 0
            else:
                row[j] = 1 + min(below[j], row[j + 1], below[j + 1])
                if row[j] > best:
                    best = row[j]
    return best


def _fill_distance(fx: np.ndarray, fy: np.ndarray, window, res: int) -> float:
    """Max over cell centers of the distance to the nearest point."""
    x0, y0, x1, y1 = (float(v) for v in window)
    cx = x0 + (np.arange(res) + 0.5) * (x1 - x0) / res
    cy = y0 + (np.arange(res) + 0.5) * (y1 - y0) / res
    gx, gy = np.meshgrid(cx, cy, indexing="ij")
    best = np.full((res, res), np.inf)
    chunk = max(16, 2 ** 21 // max(1, res * res))
    for start in range(0, fx.shape[0], chunk):
        px = fx[start:start + chunk]
        py = fy[start:start + chunk]
        d2 = ((gx[..., None] - px[None, None, :]) ** 2
              + (gy[..., None] - py[None, None, :]) ** 2)
        best = np.minimum(best, d2.min(axis=2))
    return float(np.sqrt(best.max())) if fx.shape[0] else float("inf")
