"""Exact origami point sets: iterated line-intersection closures, their
lattice and ring structure, and density measurements.

The hot expansion loop runs on a compiled kernel when the extension built;
`origami.kernel_backend()` reports which backend is active (force the pure
one with ORIGAMI_PURE=1).
"""
from ._kernel import BACKEND as _BACKEND
from .closure import (ClosureState, expand, initial_state, run_closure,
                      six_identities_check, solve_lattice, verify_lattice)
from .density import contraction_sequence, float_point, measure_density
from .field import Rational, RealQuad, squarefree_decompose
from .geometry import (Direction, LinearMap, Point, apply_map, intersect,
                       normalize_directions, point, s_bracket)
from .ringcheck import (classify_order, compute_z, construct_from_cos,
                        field_of, ring_predicate)

__version__ = "0.1.0"


def kernel_backend() -> str:
    """Name of the active expansion backend: "compiled" or "pure"."""
    return _BACKEND


__all__ = [
    "ClosureState", "Direction", "LinearMap", "Point", "Rational", "RealQuad",
    "apply_map", "classify_order", "compute_z", "construct_from_cos",
    "contraction_sequence", "expand", "field_of", "float_point",
    "initial_state", "intersect", "kernel_backend", "measure_density",
    "normalize_directions", "point", "ring_predicate", "run_closure",
    "s_bracket", "six_identities_check", "solve_lattice",
    "squarefree_decompose", "verify_lattice",
]
