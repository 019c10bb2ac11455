"""Static SVG renderings of point sets and contraction traces."""
from __future__ import annotations

import numpy as np

from .closure import ClosureState
from .density import ContractionTrace

CLOSURE_VIEW = (-3.0, -3.0, 4.0, 4.0)  # fixed world window for closure plots
_SCALE = 80  # pixels per world unit


def _fmt(v: float) -> str:
    return f"{v:.3f}".rstrip("0").rstrip(".")


class _Canvas:
    def __init__(self, x0, y0, x1, y1):
        self.x0, self.y0, self.x1, self.y1 = x0, y0, x1, y1
        self.w = (x1 - x0) * _SCALE
        self.h = (y1 - y0) * _SCALE
        self.parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'width="{_fmt(self.w)}" height="{_fmt(self.h)}" '
            f'viewBox="0 0 {_fmt(self.w)} {_fmt(self.h)}">',
            '<rect width="100%" height="100%" fill="white"/>',
        ]

    def sx(self, x: float) -> float:
        return (x - self.x0) * _SCALE

    def sy(self, y: float) -> float:
        return (self.y1 - y) * _SCALE  # flip: world y grows upward

    def line(self, xa, ya, xb, yb, color="#999", width=1.0):
        self.parts.append(
            f'<line x1="{_fmt(self.sx(xa))}" y1="{_fmt(self.sy(ya))}" '
            f'x2="{_fmt(self.sx(xb))}" y2="{_fmt(self.sy(yb))}" '
            f'stroke="{color}" stroke-width="{_fmt(width)}"/>'
        )

    def circle(self, x, y, r=2.0, color="#1f63a8", title=None):
        head = (f'<circle cx="{_fmt(self.sx(x))}" cy="{_fmt(self.sy(y))}" '
                f'r="{_fmt(r)}" fill="{color}"')
        if title:
            self.parts.append(f"{head}><title>{title}</title></circle>")
        else:
            self.parts.append(f"{head}/>")

    def axes(self):
        if self.x0 < 0 < self.x1:
            self.line(0, self.y0, 0, self.y1, "#555", 1.0)
        if self.y0 < 0 < self.y1:
            self.line(self.x0, 0, self.x1, 0, "#555", 1.0)

    def render(self) -> str:
        return "\n".join(self.parts + ["</svg>"]) + "\n"


def closure_svg(state: ClosureState) -> str:
    cv = _Canvas(*CLOSURE_VIEW)
    cv.axes()
    pts = sorted(
        ((float(p.re), float(p.im), d)
         for p, d in zip(state.points, state.depth_introduced)),
        key=lambda t: (t[0], t[1]),
    )
    for x, y, depth in pts:
        if CLOSURE_VIEW[0] <= x <= CLOSURE_VIEW[2] and \
                CLOSURE_VIEW[1] <= y <= CLOSURE_VIEW[3]:
            cv.circle(x, y, 2.0, _depth_color(depth))
    return cv.render()


def _depth_color(depth: int) -> str:
    hue = (210 + depth * 40) % 360
    return f"hsl({hue},70%,42%)"


def contraction_svg(trace: ContractionTrace) -> str:
    xs = [0.0, 1.0, float(trace.p0.re)]
    ys = [0.0, 0.0, float(trace.p0.im)]
    for e in trace.entries:
        for p in (e.p, e.s, e.r):
            xs.append(float(p.re))
            ys.append(float(p.im))
    pad = 0.3
    cv = _Canvas(min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)
    cv.axes()
    for d in trace.directions:  # carrier lines through the origin
        dx, dy = float(d.vec.re), float(d.vec.im)
        span = 8.0
        cv.line(-span * dx, -span * dy, span * dx, span * dy, "#ddd", 0.8)
    cv.circle(0, 0, 3.0, "#333", "0")
    cv.circle(1, 0, 3.0, "#333", "1")
    cv.circle(float(trace.p0.re), float(trace.p0.im), 3.0, "hsl(210,80%,40%)", "p")
    for i, e in enumerate(trace.entries, start=1):
        hue_p = (210 + 25 * i) % 360
        hue_s = (0 + 25 * i) % 360
        cv.circle(float(e.p.re), float(e.p.im), 2.5,
                  f"hsl({hue_p},80%,45%)", f"p_{i}")
        cv.circle(float(e.s.re), float(e.s.im), 2.5,
                  f"hsl({hue_s},80%,45%)", f"s_{i}")
        cv.circle(float(e.r.re), float(e.r.im), 2.0, "#888", f"r_{i}")
    return cv.render()


def density_svg(fx: np.ndarray, fy: np.ndarray, window, resolution: int) -> str:
    x0, y0, x1, y1 = (float(v) for v in window)
    cv = _Canvas(x0, y0, x1, y1)
    for k in range(resolution + 1):  # grid lines
        gx = x0 + k * (x1 - x0) / resolution
        gy = y0 + k * (y1 - y0) / resolution
        cv.line(gx, y0, gx, y1, "#eee", 0.5)
        cv.line(x0, gy, x1, gy, "#eee", 0.5)
    cv.axes()
    order = np.lexsort((fy, fx))
    for idx in order:
        x, y = float(fx[idx]), float(fy[idx])
        if x0 <= x <= x1 and y0 <= y <= y1:
            cv.circle(x, y, 2.0)
    return cv.render()
