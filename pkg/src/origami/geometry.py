"""Points, directions and the line-intersection operator.

A Point is a complex number split into exact RealQuad components. A
Direction is a nonzero point taken modulo multiplication by a nonzero real
scalar, so two angles describe the same direction exactly when they agree
mod pi. The intersection operator works entirely through the bracket
s(x, y) = x*conj(y) - conj(x)*y, which is purely imaginary and vanishes
exactly for parallel vectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DuplicateDirections, ParallelDirections, SingularMap
from .field import RealQuad

_ScalarLike = Union[RealQuad, Fraction, int]


@dataclass(frozen=True)
class Point:
    re: RealQuad
    im: RealQuad

    def __add__(self, other: "Point") -> "Point":
        return Point(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "Point":
        return Point(-self.re, -self.im)

    def scale(self, factor: _ScalarLike) -> "Point":
        """Multiply by a real scalar."""
        return Point(self.re * factor, self.im * factor)

    def cmul(self, other: "Point") -> "Point":
        """Complex product."""
        return Point(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conj(self) -> "Point":
        return Point(self.re, -self.im)

    def csquare(self) -> "Point":
        return self.cmul(self)

    def norm2(self) -> RealQuad:
        """Squared complex modulus |p|^2, exact."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def __str__(self) -> str:
        return f"({self.re}, {self.im})"


def point(re: _ScalarLike = 0, im: _ScalarLike = 0) -> Point:
    """Convenience constructor coercing plain numbers to RealQuad."""
    return Point(RealQuad.rational(re) if not isinstance(re, RealQuad) else re,
                 RealQuad.rational(im) if not isinstance(im, RealQuad) else im)


P_ZERO = point(0, 0)
P_ONE = point(1, 0)


def cross(x: Point, y: Point) -> RealQuad:
    """Real 2x2 determinant x.re*y.im - x.im*y.re.

    Relates to the bracket by s(x, y) = -2i * cross(x, y).
    """
    return x.re * y.im - x.im * y.re


def s_bracket(x: Point, y: Point) -> Point:
    """x*conj(y) - conj(x)*y; always purely imaginary."""
    return x.cmul(y.conj()) - x.conj().cmul(y)


class Direction:
    """A line direction: a nonzero vector modulo nonzero real scaling.

    Canonical representative: (t, 1) for non-horizontal directions (the
    second component is scaled to 1, which is positive, so opposite vectors
    collapse together), and (1, 0) for the horizontal direction. Equality
    and hashing act on this canonical vector, which realizes equality of
    angles mod pi structurally.
    """

    __slots__ = ("vec",)

    vec: Point

    def __init__(self, vector: Point):
        if vector.is_zero():
            raise ValueError("direction vector must be nonzero")
        if vector.im.is_zero():
            canon = Point(RealQuad(1), RealQuad(0))
        else:
            canon = Point(vector.re / vector.im, RealQuad(1))
        object.__setattr__(self, "vec", canon)

    def __setattr__(self, name, value):
        raise AttributeError("Direction is immutable")

    @classmethod
    def real_axis(cls) -> "Direction":
        return cls(P_ONE)

    @classmethod
    def imaginary_axis(cls) -> "Direction":
        return cls(point(0, 1))

    def is_horizontal(self) -> bool:
        return self.vec.im.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, Direction):
            return self.vec == other.vec
        return NotImplemented

    def __hash__(self):
        return hash((self.vec.re.key(), self.vec.im.key()))

    def __str__(self) -> str:
        return f"dir{self.vec}"

    def __repr__(self) -> str:
        return f"Direction({self.vec.re!r}, {self.vec.im!r})"


def intersect(u: Direction, v: Direction, p: Point, q: Point) -> Point:
    """The unique common point of the line through p with direction u and
    the line through q with direction v.

    I(p, q) = (s(u,p)/s(u,v)) v + (s(v,q)/s(v,u)) u, computed via the real
    cross products (the common factor -2i cancels in every ratio). Defined
    for p = q as well; only parallel directions are rejected.
    """
    cuv = cross(u.vec, v.vec)
    if cuv.is_zero():
        raise ParallelDirections(f"{u} and {v} are parallel")
    t1 = cross(u.vec, p) / cuv
    t2 = cross(v.vec, q) / (-cuv)
    return v.vec.scale(t1) + u.vec.scale(t2)


@dataclass(frozen=True)
class LinearMap:
    """Invertible 2x2 real matrix ((a, b), (c, d)) acting on points."""

    a: RealQuad
    b: RealQuad
    c: RealQuad
    d: RealQuad

    def __post_init__(self):
        if self.det().is_zero():
            raise SingularMap("linear map must have nonzero determinant")

    def det(self) -> RealQuad:
        return self.a * self.d - self.b * self.c

    def apply(self, p: Point) -> Point:
        return Point(self.a * p.re + self.b * p.im,
                     self.c * p.re + self.d * p.im)

    __call__ = apply

    def apply_direction(self, u: Direction) -> Direction:
        return Direction(self.apply(u.vec))

    def inverse(self) -> "LinearMap":
        det = self.det()
        return LinearMap(self.d / det, -self.b / det,
                         -self.c / det, self.a / det)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        return LinearMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    @classmethod
    def identity(cls) -> "LinearMap":
        one, zero = RealQuad(1), RealQuad(0)
        return cls(one, zero, zero, one)

    @classmethod
    def complex_multiplication(cls, w: Point) -> "LinearMap":
        """The R-linear map z -> w*z for a nonzero complex w."""
        if w.is_zero():
            raise SingularMap("multiplication by zero is singular")
        return cls(w.re, -w.im, w.im, w.re)


def apply_map(t: LinearMap, p: Point) -> Point:
    return t.apply(p)


def ensure_distinct(directions: Iterable[Direction]) -> None:
    seen = set()
    for d in directions:
        if d in seen:
            raise DuplicateDirections(f"repeated direction {d}")
        seen.add(d)


def normalize_directions(
    directions: Sequence[Direction],
) -> tuple[list[Direction], LinearMap]:
    """Rotate/shear a direction set so that one direction is the real axis.

    If the horizontal direction already occurs it is moved to the front and
    the identity map is returned. Otherwise the map is complex division by
    the first direction's vector, which sends it to the real axis; applying
    the same map to points commutes with intersection, so constructions
    before and after the change of frame correspond one to one.
    """
    dirs = list(directions)
    if len(dirs) < 3:
        raise DuplicateDirections("need at least 3 directions to normalize")
    ensure_distinct(dirs)
    axis = Direction.real_axis()
    if axis in dirs:
        dirs.remove(axis)
        return [axis] + dirs, LinearMap.identity()
    w = dirs[0].vec
    inv_norm = w.norm2().inverse()
    recip = Point(w.re * inv_norm, -(w.im * inv_norm))
    t = LinearMap.complex_multiplication(recip)
    return [t.apply_direction(d) for d in dirs], t
