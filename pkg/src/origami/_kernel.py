"""Backend selection for the expansion kernels.

The compiled extension (origami._core, built from Cython) is preferred when
it imports; the pure backend (origami._core_py) is always available and is
the reference implementation. Selection happens once at import time and can
be forced to pure with the environment variable ORIGAMI_PURE=1.

The compiled exact kernel has a bounded integer envelope and raises
KernelOverflow when inputs or intermediates leave it; expand_exact here
transparently retries the whole step on the pure backend, so callers always
get the reference answer.
"""
from __future__ import annotations

import os

from . import _core_py as core_pure
from .errors import KernelOverflow

core_compiled = None
if not os.environ.get("ORIGAMI_PURE"):
    try:
        from . import _core as core_compiled  # type: ignore[no-redef]
    except ImportError:
        core_compiled = None

BACKEND = "compiled" if core_compiled is not None else "pure"


def expand_exact(points, dirs, radicand, cap=0):
    if core_compiled is not None:
        try:
            return core_compiled.expand_exact(points, dirs, radicand, cap)
        except KernelOverflow:
            pass
    return core_pure.expand_exact(points, dirs, radicand, cap)


def expand_float(xs, ys, dirs, cap=0, quant=2.0 ** -40):
    if core_compiled is not None:
        return core_compiled.expand_float(xs, ys, dirs, cap, quant)
    return core_pure.expand_float(xs, ys, dirs, cap, quant)
