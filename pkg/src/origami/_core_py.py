"""Pure-Python expansion kernels (fallback backend).

Both backends speak the same encoded currency so the closure engine can swap
them freely:

* exact points are 5-tuples of integers ``(XA, XB, YA, YB, D)`` encoding the
  complex value ``((XA + XB*sqrt(n))/D, (YA + YB*sqrt(n))/D)`` with D > 0 and
  gcd(XA, XB, YA, YB, D) = 1;
* exact directions are 4-tuples ``(UXA, UXB, UYA, UYB)`` of integer quad
  components (denominators cleared; directions are scale invariant);
* float points are plain coordinate pairs deduplicated on a grid of pitch
  ``quant``.

One expansion step enumerates candidates in the canonical order

    for each source index i, for each direction pair a < b (index order),
    for each partner index j != i:   intersect(dir_a, dir_b, P_i, P_j)

which both backends follow exactly, so results (including the cut point when
a ``cap`` truncates the step) are backend independent. Only intersections of
lines through two *distinct* current points are taken, matching the
generation rule of the point-set closure.
"""
from __future__ import annotations

from math import gcd

import numpy as np

ExactPoint = tuple[int, int, int, int, int]
ExactDir = tuple[int, int, int, int]


def direction_pairs(dirs: list[ExactDir], radicand: int):
    """Precompute cross(u, v) data for each unordered direction pair.

    Returns tuples (u, v, VA, VB, NV) where (VA, VB) is the quad-valued
    cross product and NV its field norm; parallel pairs are dropped.
    """
    n = radicand
    pairs = []
    for a in range(len(dirs)):
        uxa, uxb, uya, uyb = dirs[a]
        for b in range(a + 1, len(dirs)):
            vxa, vxb, vya, vyb = dirs[b]
            va = uxa * vya + uxb * vyb * n - (uya * vxa + uyb * vxb * n)
            vb = uxa * vyb + uxb * vya - (uya * vxb + uyb * vxa)
            if va == 0 and vb == 0:
                continue
            nv = va * va - vb * vb * n
            pairs.append((dirs[a], dirs[b], va, vb, nv))
    return pairs


def expand_exact(
    points: list[ExactPoint],
    dirs: list[ExactDir],
    radicand: int,
    cap: int = 0,
) -> tuple[list[ExactPoint], bool]:
    """One exact expansion step; returns (new points, truncated flag).

    ``cap`` bounds the total point count (existing plus new); 0 disables it.
    Arbitrary-precision integers throughout, so this path never overflows.
    """
    n = radicand
    pairs = direction_pairs(dirs, n)
    seen = set(points)
    npts = len(points)
    total = npts
    out: list[ExactPoint] = []
    truncated = False
    if cap and total >= cap:
        return out, False
    for i in range(npts):
        pxa, pxb, pya, pyb, pd = points[i]
        for (u, v, va, vb, nv) in pairs:
            uxa, uxb, uya, uyb = u
            vxa, vxb, vya, vyb = v
            # cross(u, P_i) scaled by the point denominator
            ca = uxa * pya + uxb * pyb * n - (uya * pxa + uyb * pxb * n)
            cb = uxa * pyb + uxb * pya - (uya * pxb + uyb * pxa)
            # t1 = cross(u,p)/cross(u,v); numerator after rationalizing
            t1a = ca * va - cb * vb * n
            t1b = cb * va - ca * vb
            # t1 * v, still j-independent
            w1xa = t1a * vxa + t1b * vxb * n
            w1xb = t1a * vxb + t1b * vxa
            w1ya = t1a * vya + t1b * vyb * n
            w1yb = t1a * vyb + t1b * vya
            for j in range(npts):
                if j == i:
                    continue
                qxa, qxb, qya, qyb, qd = points[j]
                ea = vxa * qya + vxb * qyb * n - (vya * qxa + vyb * qxb * n)
                eb = vxa * qyb + vxb * qya - (vya * qxb + vyb * qxa)
                t2a = -(ea * va - eb * vb * n)
                t2b = -(eb * va - ea * vb)
                gxa = w1xa * qd + (t2a * uxa + t2b * uxb * n) * pd
                gxb = w1xb * qd + (t2a * uxb + t2b * uxa) * pd
                gya = w1ya * qd + (t2a * uya + t2b * uyb * n) * pd
                gyb = w1yb * qd + (t2a * uyb + t2b * uya) * pd
                den = pd * qd * nv
                if den < 0:
                    gxa, gxb, gya, gyb, den = -gxa, -gxb, -gya, -gyb, -den
                g = gcd(gxa, gxb, gya, gyb, den)
                if g > 1:
                    gxa //= g
                    gxb //= g
                    gya //= g
                    gyb //= g
                    den //= g
                key = (gxa, gxb, gya, gyb, den)
                if key not in seen:
                    seen.add(key)
                    out.append(key)
                    total += 1
                    if cap and total >= cap:
                        return out, True
    return out, truncated


def _quantize(arr: np.ndarray, inv_quant: float) -> np.ndarray:
    return np.floor(arr * inv_quant + 0.5).astype(np.int64)


def expand_float(
    xs,
    ys,
    dirs: list[tuple[float, float]],
    cap: int = 0,
    quant: float = 2.0 ** -40,
) -> tuple[np.ndarray, np.ndarray, bool]:
    """One float expansion step (numpy-vectorized fallback).

    Candidates are produced in the canonical order and deduplicated on a
    grid of pitch ``quant``; the stored representative of a grid cell is the
    first candidate that hit it. Returns (new xs, new ys, truncated).
    """
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    npts = xs.shape[0]
    inv = 1.0 / quant
    pairs = []
    for a in range(len(dirs)):
        ux, uy = dirs[a]
        for b in range(a + 1, len(dirs)):
            vx, vy = dirs[b]
            cuv = ux * vy - uy * vx
            if cuv == 0.0:
                continue
            pairs.append((ux, uy, vx, vy, cuv))
    seen = set(zip(_quantize(xs, inv).tolist(), _quantize(ys, inv).tolist()))
    total = len(seen)
    out_x: list[float] = []
    out_y: list[float] = []
    truncated = False
    if cap and total >= cap:
        return np.array(out_x), np.array(out_y), False

    # process blocks of source indices; order inside a block is candidate order
    block = max(1, int(4_000_000 // max(1, npts * max(1, len(pairs)))))
    idx_all = np.arange(npts)
    for start in range(0, npts, block):
        chunk_x: list[np.ndarray] = []
        chunk_y: list[np.ndarray] = []
        for i in range(start, min(start + block, npts)):
            mask = idx_all != i
            qx = xs[mask]
            qy = ys[mask]
            px = float(xs[i])
            py = float(ys[i])
            for (ux, uy, vx, vy, cuv) in pairs:
                t1 = (ux * py - uy * px) / cuv
                t2 = -(vx * qy - vy * qx) / cuv
                chunk_x.append(t1 * vx + t2 * ux)
                chunk_y.append(t1 * vy + t2 * uy)
        if not chunk_x:
            continue
        cx = np.concatenate(chunk_x)
        cy = np.concatenate(chunk_y)
        keys = np.stack([_quantize(cx, inv), _quantize(cy, inv)], axis=1)
        # first occurrence of each key, kept in candidate order
        _, first = np.unique(keys, axis=0, return_index=True)
        first.sort()
        for k in first:
            key = (int(keys[k, 0]), int(keys[k, 1]))
            if key in seen:
                continue
            seen.add(key)
            out_x.append(float(cx[k]))
            out_y.append(float(cy[k]))
            total += 1
            if cap and total >= cap:
                return np.array(out_x), np.array(out_y), True
    return np.array(out_x), np.array(out_y), truncated
