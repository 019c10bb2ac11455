# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled expansion kernels.

Same contract and candidate order as origami._core_py (which is the
reference); see that module for the encoding. The exact kernel stores
point data in int64 and runs intermediates through 128-bit integers;
inputs outside its safe envelope (coordinate numerators beyond 2**20,
direction components beyond 2**10, radicand beyond 64) raise
KernelOverflow and the caller re-runs the step on the pure backend.
"""

from libc.stdlib cimport calloc, free, malloc, realloc
from libc.math cimport floor

from .errors import KernelOverflow

ctypedef long long i64
ctypedef unsigned long long u64

cdef extern from *:
    ctypedef long long i128 "__int128"
    ctypedef unsigned long long u128 "unsigned __int128"

DEF POINT_BOUND = 1048576        # 2**20, checked on every exact input value
DEF DIR_BOUND = 1024             # 2**10
DEF RADICAND_BOUND = 64
DEF STORE_BOUND = 4611686018427387904  # 2**62, post-reduction storage check


cdef inline u64 _mix(u64 x) nogil:
    # splitmix64 finalizer
    x += <u64>0x9E3779B97F4A7C15
    x = (x ^ (x >> 30)) * <u64>0xBF58476D1CE4E5B9
    x = (x ^ (x >> 27)) * <u64>0x94D049BB133111EB
    return x ^ (x >> 31)


cdef inline u64 _hash5(i64 a, i64 b, i64 c, i64 d, i64 e) nogil:
    cdef u64 h = _mix(<u64>a)
    h = _mix(h ^ <u64>b)
    h = _mix(h ^ <u64>c)
    h = _mix(h ^ <u64>d)
    h = _mix(h ^ <u64>e)
    return h


cdef inline u64 _hash2(i64 a, i64 b) nogil:
    cdef u64 h = _mix(<u64>a)
    h = _mix(h ^ <u64>b)
    return h


cdef inline u128 _uabs(i128 v) nogil:
    return <u128>(-v) if v < 0 else <u128>v


cdef inline u128 _ugcd(u128 a, u128 b) nogil:
    cdef u128 t
    while b != 0:
        t = a % b
        a = b
        b = t
    return a


# ---------------------------------------------------------------------------
# exact kernel
# ---------------------------------------------------------------------------

cdef struct ExactTable:
    i64 *vals          # count * 5 reduced point encodings
    i64 *slots         # capacity, index+1 or 0
    Py_ssize_t count
    Py_ssize_t capacity  # power of two
    Py_ssize_t limit


cdef int _exact_grow(ExactTable *t) except -1:
    cdef Py_ssize_t newcap = t.capacity * 2
    cdef i64 *slots = <i64 *>calloc(newcap, sizeof(i64))
    if slots == NULL:
        raise MemoryError()
    cdef Py_ssize_t k, pos
    cdef u64 mask = newcap - 1
    for k in range(t.count):
        pos = <Py_ssize_t>(_hash5(t.vals[5 * k], t.vals[5 * k + 1],
                                  t.vals[5 * k + 2], t.vals[5 * k + 3],
                                  t.vals[5 * k + 4]) & mask)
        while slots[pos] != 0:
            pos = <Py_ssize_t>((pos + 1) & mask)
        slots[pos] = k + 1
    free(t.slots)
    t.slots = slots
    t.capacity = newcap
    t.limit = (newcap * 3) // 5
    return 0


cdef Py_ssize_t _exact_insert(ExactTable *t, i64 a, i64 b, i64 c, i64 d,
                              i64 e, i64 *vals_cap) except -2:
    """Insert the 5-key; return its index, or -1 if it was already present."""
    cdef u64 mask = t.capacity - 1
    cdef Py_ssize_t pos = <Py_ssize_t>(_hash5(a, b, c, d, e) & mask)
    cdef Py_ssize_t k
    while t.slots[pos] != 0:
        k = t.slots[pos] - 1
        if (t.vals[5 * k] == a and t.vals[5 * k + 1] == b and
                t.vals[5 * k + 2] == c and t.vals[5 * k + 3] == d and
                t.vals[5 * k + 4] == e):
            return -1
        pos = <Py_ssize_t>((pos + 1) & mask)
    k = t.count
    if 5 * (k + 1) > vals_cap[0]:
        vals_cap[0] = vals_cap[0] * 2
        t.vals = <i64 *>realloc(t.vals, vals_cap[0] * sizeof(i64))
        if t.vals == NULL:
            raise MemoryError()
    t.vals[5 * k] = a
    t.vals[5 * k + 1] = b
    t.vals[5 * k + 2] = c
    t.vals[5 * k + 3] = d
    t.vals[5 * k + 4] = e
    t.slots[pos] = k + 1
    t.count = k + 1
    if t.count >= t.limit:
        _exact_grow(t)
    return k


def expand_exact(points, dirs, radicand, cap=0):
    """One exact expansion step on int64 encodings; see _core_py.expand_exact."""
    cdef Py_ssize_t npts = len(points)
    cdef Py_ssize_t ndirs = len(dirs)
    cdef i64 n = radicand
    cdef i64 capv = cap if cap else 0
    if n < 0 or n > RADICAND_BOUND:
        raise KernelOverflow("radicand outside compiled kernel envelope")

    cdef i64 *pts = <i64 *>malloc(max(1, npts * 5) * sizeof(i64))
    cdef i64 *dvec = <i64 *>malloc(max(1, ndirs * 4) * sizeof(i64))
    if pts == NULL or dvec == NULL:
        free(pts)
        free(dvec)
        raise MemoryError()

    cdef Py_ssize_t i, j, k, m
    cdef i64 v
    try:
        for i in range(npts):
            tup = points[i]
            for k in range(5):
                v = tup[k]
                if v > POINT_BOUND or v < -POINT_BOUND:
                    raise KernelOverflow("point numerator too large")
                pts[5 * i + k] = v
        for i in range(ndirs):
            tup = dirs[i]
            for k in range(4):
                v = tup[k]
                if v > DIR_BOUND or v < -DIR_BOUND:
                    raise KernelOverflow("direction component too large")
                dvec[4 * i + k] = v
        return _expand_exact_impl(pts, npts, dvec, ndirs, n, capv)
    finally:
        free(pts)
        free(dvec)


cdef _expand_exact_impl(i64 *pts, Py_ssize_t npts, i64 *dvec,
                        Py_ssize_t ndirs, i64 n, i64 cap):
    # direction pair precomputation (quad cross products and norms)
    cdef Py_ssize_t maxpairs = ndirs * (ndirs - 1) // 2
    cdef i64 *pair = <i64 *>malloc(max(1, maxpairs * 11) * sizeof(i64))
    if pair == NULL:
        raise MemoryError()
    cdef Py_ssize_t npairs = 0
    cdef Py_ssize_t a, b
    cdef i64 uxa, uxb, uya, uyb, vxa, vxb, vya, vyb, va, vb
    cdef i128 nv
    for a in range(ndirs):
        uxa = dvec[4 * a]
        uxb = dvec[4 * a + 1]
        uya = dvec[4 * a + 2]
        uyb = dvec[4 * a + 3]
        for b in range(a + 1, ndirs):
            vxa = dvec[4 * b]
            vxb = dvec[4 * b + 1]
            vya = dvec[4 * b + 2]
            vyb = dvec[4 * b + 3]
            va = uxa * vya + uxb * vyb * n - (uya * vxa + uyb * vxb * n)
            vb = uxa * vyb + uxb * vya - (uya * vxb + uyb * vxa)
            if va == 0 and vb == 0:
                continue
            pair[11 * npairs] = uxa
            pair[11 * npairs + 1] = uxb
            pair[11 * npairs + 2] = uya
            pair[11 * npairs + 3] = uyb
            pair[11 * npairs + 4] = vxa
            pair[11 * npairs + 5] = vxb
            pair[11 * npairs + 6] = vya
            pair[11 * npairs + 7] = vyb
            pair[11 * npairs + 8] = va
            pair[11 * npairs + 9] = vb
            # norm va*va - vb*vb*n fits i64 under the input bounds
            pair[11 * npairs + 10] = <i64>(<i128>va * va - <i128>vb * vb * n)
            npairs += 1

    cdef ExactTable tab
    tab.count = 0
    tab.capacity = 1 << 13
    while tab.capacity < 2 * (npts + 1024):
        tab.capacity *= 2
    tab.limit = (tab.capacity * 3) // 5
    cdef i64 vals_cap = 5 * (npts + 4096)
    tab.vals = <i64 *>malloc(vals_cap * sizeof(i64))
    tab.slots = <i64 *>calloc(tab.capacity, sizeof(i64))
    if tab.vals == NULL or tab.slots == NULL:
        free(pair)
        free(tab.vals)
        free(tab.slots)
        raise MemoryError()

    cdef Py_ssize_t i, j, pi
    cdef i64 pxa, pxb, pya, pyb, pd, qxa, qxb, qya, qyb, qd
    cdef i128 ca, cb, ea, eb, t1a, t1b, t2a, t2b
    cdef i128 w1xa, w1xb, w1ya, w1yb
    cdef i128 gxa, gxb, gya, gyb, den, nv128
    cdef u128 g
    cdef i64 ra, rb, rc, rd, re
    cdef i64 total = npts
    cdef bint truncated = False
    cdef Py_ssize_t first_new = npts
    out = []

    try:
        for i in range(npts):
            if _exact_insert(&tab, pts[5 * i], pts[5 * i + 1], pts[5 * i + 2],
                             pts[5 * i + 3], pts[5 * i + 4], &vals_cap) == -1:
                raise ValueError("input points must be distinct")
        if cap and total >= cap:
            return [], False

        for i in range(npts):
            pxa = pts[5 * i]
            pxb = pts[5 * i + 1]
            pya = pts[5 * i + 2]
            pyb = pts[5 * i + 3]
            pd = pts[5 * i + 4]
            for pi in range(npairs):
                uxa = pair[11 * pi]
                uxb = pair[11 * pi + 1]
                uya = pair[11 * pi + 2]
                uyb = pair[11 * pi + 3]
                vxa = pair[11 * pi + 4]
                vxb = pair[11 * pi + 5]
                vya = pair[11 * pi + 6]
                vyb = pair[11 * pi + 7]
                va = pair[11 * pi + 8]
                vb = pair[11 * pi + 9]
                nv128 = pair[11 * pi + 10]
                ca = <i128>uxa * pya + <i128>uxb * pyb * n \
                    - (<i128>uya * pxa + <i128>uyb * pxb * n)
                cb = <i128>uxa * pyb + <i128>uxb * pya \
                    - (<i128>uya * pxb + <i128>uyb * pxa)
                t1a = ca * va - cb * vb * n
                t1b = cb * va - ca * vb
                w1xa = t1a * vxa + t1b * vxb * n
                w1xb = t1a * vxb + t1b * vxa
                w1ya = t1a * vya + t1b * vyb * n
                w1yb = t1a * vyb + t1b * vya
                for j in range(npts):
                    if j == i:
                        continue
                    qxa = pts[5 * j]
                    qxb = pts[5 * j + 1]
                    qya = pts[5 * j + 2]
                    qyb = pts[5 * j + 3]
                    qd = pts[5 * j + 4]
                    ea = <i128>vxa * qya + <i128>vxb * qyb * n \
                        - (<i128>vya * qxa + <i128>vyb * qxb * n)
                    eb = <i128>vxa * qyb + <i128>vxb * qya \
                        - (<i128>vya * qxb + <i128>vyb * qxa)
                    t2a = -(ea * va - eb * vb * n)
                    t2b = -(eb * va - ea * vb)
                    gxa = w1xa * qd + (t2a * uxa + t2b * uxb * n) * pd
                    gxb = w1xb * qd + (t2a * uxb + t2b * uxa) * pd
                    gya = w1ya * qd + (t2a * uya + t2b * uyb * n) * pd
                    gyb = w1yb * qd + (t2a * uyb + t2b * uya) * pd
                    den = <i128>pd * qd * nv128
                    if den < 0:
                        gxa = -gxa
                        gxb = -gxb
                        gya = -gya
                        gyb = -gyb
                        den = -den
                    g = _ugcd(_ugcd(_ugcd(_uabs(gxa), _uabs(gxb)),
                                    _ugcd(_uabs(gya), _uabs(gyb))),
                              <u128>den)
                    if g > 1:
                        gxa = gxa / <i128>g
                        gxb = gxb / <i128>g
                        gya = gya / <i128>g
                        gyb = gyb / <i128>g
                        den = den / <i128>g
                    if (gxa > STORE_BOUND or gxa < -STORE_BOUND or
                            gxb > STORE_BOUND or gxb < -STORE_BOUND or
                            gya > STORE_BOUND or gya < -STORE_BOUND or
                            gyb > STORE_BOUND or gyb < -STORE_BOUND or
                            den > STORE_BOUND):
                        raise KernelOverflow("reduced point exceeds int64")
                    ra = <i64>gxa
                    rb = <i64>gxb
                    rc = <i64>gya
                    rd = <i64>gyb
                    re = <i64>den
                    if _exact_insert(&tab, ra, rb, rc, rd, re, &vals_cap) >= 0:
                        out.append((ra, rb, rc, rd, re))
                        total += 1
                        if cap and total >= cap:
                            return out, True
        return out, truncated
    finally:
        free(pair)
        free(tab.vals)
        free(tab.slots)


# ---------------------------------------------------------------------------
# float kernel
# ---------------------------------------------------------------------------

cdef struct FloatTable:
    i64 *keys          # count * 2 quantized coordinates
    i64 *slots
    Py_ssize_t count
    Py_ssize_t capacity
    Py_ssize_t limit


cdef int _float_grow(FloatTable *t) except -1:
    cdef Py_ssize_t newcap = t.capacity * 2
    cdef i64 *slots = <i64 *>calloc(newcap, sizeof(i64))
    if slots == NULL:
        raise MemoryError()
    cdef Py_ssize_t k, pos
    cdef u64 mask = newcap - 1
    for k in range(t.count):
        pos = <Py_ssize_t>(_hash2(t.keys[2 * k], t.keys[2 * k + 1]) & mask)
        while slots[pos] != 0:
            pos = <Py_ssize_t>((pos + 1) & mask)
        slots[pos] = k + 1
    free(t.slots)
    t.slots = slots
    t.capacity = newcap
    t.limit = (newcap * 3) // 5
    return 0


cdef Py_ssize_t _float_insert(FloatTable *t, i64 kx, i64 ky,
                              i64 *keys_cap) except -2:
    cdef u64 mask = t.capacity - 1
    cdef Py_ssize_t pos = <Py_ssize_t>(_hash2(kx, ky) & mask)
    cdef Py_ssize_t k
    while t.slots[pos] != 0:
        k = t.slots[pos] - 1
        if t.keys[2 * k] == kx and t.keys[2 * k + 1] == ky:
            return -1
        pos = <Py_ssize_t>((pos + 1) & mask)
    k = t.count
    if 2 * (k + 1) > keys_cap[0]:
        keys_cap[0] = keys_cap[0] * 2
        t.keys = <i64 *>realloc(t.keys, keys_cap[0] * sizeof(i64))
        if t.keys == NULL:
            raise MemoryError()
    t.keys[2 * k] = kx
    t.keys[2 * k + 1] = ky
    t.slots[pos] = k + 1
    t.count = k + 1
    if t.count >= t.limit:
        _float_grow(t)
    return k


def expand_float(xs, ys, dirs, cap=0, quant=2.0 ** -40):
    """One float expansion step; see _core_py.expand_float."""
    import numpy as np
    cdef double[::1] xv = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double[::1] yv = np.ascontiguousarray(ys, dtype=np.float64)
    cdef Py_ssize_t npts = xv.shape[0]
    cdef Py_ssize_t ndirs = len(dirs)
    cdef double inv = 1.0 / quant
    cdef i64 capv = cap if cap else 0

    cdef double *dd = <double *>malloc(max(1, ndirs * 2) * sizeof(double))
    cdef double *paird = <double *>malloc(
        max(1, ndirs * (ndirs - 1) // 2 * 5) * sizeof(double))
    if dd == NULL or paird == NULL:
        free(dd)
        free(paird)
        raise MemoryError()
    cdef Py_ssize_t a, b, npairs = 0
    cdef double cuv
    for a in range(ndirs):
        dd[2 * a] = dirs[a][0]
        dd[2 * a + 1] = dirs[a][1]
    for a in range(ndirs):
        for b in range(a + 1, ndirs):
            cuv = dd[2 * a] * dd[2 * b + 1] - dd[2 * a + 1] * dd[2 * b]
            if cuv == 0.0:
                continue
            paird[5 * npairs] = dd[2 * a]
            paird[5 * npairs + 1] = dd[2 * a + 1]
            paird[5 * npairs + 2] = dd[2 * b]
            paird[5 * npairs + 3] = dd[2 * b + 1]
            paird[5 * npairs + 4] = cuv
            npairs += 1

    cdef FloatTable tab
    tab.count = 0
    tab.capacity = 1 << 13
    while tab.capacity < 2 * (npts + 1024):
        tab.capacity *= 2
    tab.limit = (tab.capacity * 3) // 5
    cdef i64 keys_cap = 2 * (npts + 4096)
    tab.keys = <i64 *>malloc(keys_cap * sizeof(i64))
    tab.slots = <i64 *>calloc(tab.capacity, sizeof(i64))
    cdef double *store = <double *>malloc(max(1, 2 * 4096) * sizeof(double))
    cdef i64 store_cap = 2 * 4096
    if tab.keys == NULL or tab.slots == NULL or store == NULL:
        free(dd)
        free(paird)
        free(tab.keys)
        free(tab.slots)
        free(store)
        raise MemoryError()

    cdef Py_ssize_t i, j, pi, nnew = 0
    cdef double px, py, qx, qy, t1, t2, X, Y
    cdef double ux, uy, vx, vy
    cdef i64 kx, ky, total
    cdef bint truncated = False

    try:
        for i in range(npts):
            kx = <i64>floor(xv[i] * inv + 0.5)
            ky = <i64>floor(yv[i] * inv + 0.5)
            _float_insert(&tab, kx, ky, &keys_cap)
        total = tab.count
        if capv and total >= capv:
            return np.empty(0), np.empty(0), False

        for i in range(npts):
            px = xv[i]
            py = yv[i]
            for pi in range(npairs):
                ux = paird[5 * pi]
                uy = paird[5 * pi + 1]
                vx = paird[5 * pi + 2]
                vy = paird[5 * pi + 3]
                cuv = paird[5 * pi + 4]
                t1 = (ux * py - uy * px) / cuv
                for j in range(npts):
                    if j == i:
                        continue
                    qx = xv[j]
                    qy = yv[j]
                    t2 = -(vx * qy - vy * qx) / cuv
                    X = t1 * vx + t2 * ux
                    Y = t1 * vy + t2 * uy
                    kx = <i64>floor(X * inv + 0.5)
                    ky = <i64>floor(Y * inv + 0.5)
                    if _float_insert(&tab, kx, ky, &keys_cap) >= 0:
                        if 2 * (nnew + 1) > store_cap:
                            store_cap *= 2
                            store = <double *>realloc(
                                store, store_cap * sizeof(double))
                            if store == NULL:
                                raise MemoryError()
                        store[2 * nnew] = X
                        store[2 * nnew + 1] = Y
                        nnew += 1
                        total += 1
                        if capv and total >= capv:
                            truncated = True
                            break
                if truncated:
                    break
            if truncated:
                break

        out_x = np.empty(nnew, dtype=np.float64)
        out_y = np.empty(nnew, dtype=np.float64)
        for i in range(nnew):
            out_x[i] = store[2 * i]
            out_y[i] = store[2 * i + 1]
        return out_x, out_y, truncated
    finally:
        free(dd)
        free(paird)
        free(tab.keys)
        free(tab.slots)
        free(store)
