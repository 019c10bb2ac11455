"""Exception taxonomy for the origami package.

Domain errors (everything derived from OrigamiError) map to exit code 1
in the CLI; UsageError maps to exit code 2.
"""


class OrigamiError(Exception):
    """Base class for all domain errors raised by this package."""


class MixedRadicand(OrigamiError):
    """Two quadratic values with distinct irrational radicands were combined."""


class DivisionByZero(OrigamiError, ZeroDivisionError):
    """Division by an exactly-zero field element."""


class ZeroInput(OrigamiError):
    """An operation that requires a nonzero integer received zero."""


class ParallelDirections(OrigamiError):
    """Intersection requested for two equal (parallel) directions."""


class DuplicateDirections(OrigamiError):
    """A direction set that must be pairwise distinct contains repeats."""


class DegenerateBasis(OrigamiError):
    """Lattice coordinates requested with respect to a real basis point."""


class RealZ(OrigamiError):
    """A ring-structure query was made for a real intersection point."""


class NotQuadratic(OrigamiError):
    """The point is not algebraic of degree 2 over the rationals."""


class InvalidFraction(OrigamiError):
    """construct-from-cos arguments must satisfy 0 < s < t with gcd(s,t)=1."""


class BadOrdering(OrigamiError):
    """Contraction directions cannot be arranged as 0 < alpha < beta < gamma < pi."""


class SingularMap(OrigamiError):
    """A linear map with zero determinant was constructed or inverted."""


class UsageError(OrigamiError):
    """Malformed CLI input: unknown literal, bad flag value, mixed radicands."""


class KernelOverflow(Exception):
    """Internal: compiled kernel cannot represent an intermediate value.

    Never escapes the public API; the closure engine retries the failed
    step on the pure-Python backend.
    """
