"""Ring structure of the lattice Z + zZ and its place inside the maximal order.

For three directions {1, u, v} the constructed set is Z + zZ with
z = intersect(u, v, 0, 1). Writing k = z + conj(z) and m = z*conj(z), the
lattice is a ring exactly when k and m are integers (then z is a quadratic
algebraic integer with minimal polynomial x^2 - k x + m). When it is a ring
it sits inside the ring of integers of Q(z) = Q(sqrt(d)), d the squarefree
core of k^2 - 4m, and equality with the maximal order is decided here along
two independent routes:

* route "lemma": direct membership. The maximal order is generated by
  (1 + sqrt(d))/2 when d = 1 mod 4 and by sqrt(d) otherwise; the verdict is
  whether that generator has integer coordinates in the basis (1, z). This
  is the ground truth.
* route "trig": the tangent-based squarefree/congruence conditions, with the
  congruence evaluated on the signed squarefree core d (for odd k no
  congruence is needed; for even k the requirement is d != 1 mod 4). For
  k = 0 the route also records the verdict of reading the congruence on the
  positive quantity tan(beta)^2 itself; when the two readings disagree a
  structured warning is attached instead of silently picking one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

from .closure import solve_lattice
from .errors import DuplicateDirections, InvalidFraction, NotQuadratic, RealZ
from .field import RealQuad, SquarefreeDecomposition, squarefree_decompose
from .geometry import Direction, P_ONE, P_ZERO, Point, intersect, point

NOT_A_RING = "NotARing"
PROPER_SUBORDER = "RingProperSuborder"
MAXIMAL_ORDER = "RingMaximalOrder"


def compute_z(u: Direction, v: Direction) -> Point:
    """The fundamental lattice generator intersect(u, v, 0, 1).

    Requires 1, u, v pairwise distinct; the result is never real because z
    spans L_u(0) away from the real axis.
    """
    one = Direction.real_axis()
    if len({one, u, v}) != 3:
        raise DuplicateDirections("1, u, v must be pairwise distinct directions")
    return intersect(u, v, P_ZERO, P_ONE)


def trace_and_norm(z: Point) -> tuple[RealQuad, RealQuad]:
    """k = z + conj(z) and m = z * conj(z), exact."""
    k = z.re + z.re
    m = z.norm2()
    return k, m


@dataclass(frozen=True)
class RingPredicateResult:
    z: Point
    k: RealQuad
    m: RealQuad
    is_ring: bool
    # coordinates of z^2 in basis (1, z); integrality is the second route
    z2_coords_a: RealQuad
    z2_coords_b: RealQuad


def ring_predicate(z: Point) -> RingPredicateResult:
    """Decide whether Z + zZ is closed under multiplication.

    Two routes that must agree: k, m both integers, and z^2 itself solving
    to integer coordinates in basis (1, z).
    """
    if z.im.is_zero():
        raise RealZ("z must not be real")
    k, m = trace_and_norm(z)
    by_km = k.is_integer() and m.is_integer()
    c = solve_lattice(z.csquare(), z)
    by_square = c.is_integral()
    if by_km != by_square:
        raise AssertionError(
            f"ring criteria disagree for z={z}: k/m {by_km}, z^2 {by_square}")
    return RingPredicateResult(z=z, k=k, m=m, is_ring=by_km,
                               z2_coords_a=c.a, z2_coords_b=c.b)


@dataclass(frozen=True)
class RouteTrace:
    applicable: bool
    verdict: Optional[str]
    detail: dict


@dataclass(frozen=True)
class OrderReport:
    z: Point
    k: RealQuad
    m: RealQuad
    is_ring: bool
    discriminant: Optional[RealQuad]
    decomposition: Optional[SquarefreeDecomposition]
    field_label: Optional[int]
    verdict: str
    route_lemma: RouteTrace
    route_trig: RouteTrace
    warnings: tuple[str, ...] = ()


def field_of(z: Point) -> int:
    """The squarefree d < 0 with Q(z) = Q(sqrt(d)).

    Needs z nonreal and algebraic of degree 2 (k and m rational); works for
    non-ring z as well by clearing denominators before the decomposition.
    """
    if z.im.is_zero():
        raise RealZ("z must not be real")
    k, m = trace_and_norm(z)
    if not (k.is_rational() and m.is_rational()):
        raise NotQuadratic(f"z={z} is not quadratic over Q")
    disc = k.as_fraction() ** 2 - 4 * m.as_fraction()
    # Q(sqrt(p/q)) = Q(sqrt(p*q))
    return squarefree_decompose(disc.numerator * disc.denominator).core


def _maximal_order_generator(d: int, z: Point, y: int) -> Point:
    """The canonical generator of the maximal order of Q(sqrt(d)), expressed
    exactly in the quadratic field carrying z.

    sqrt(d) is purely imaginary here (d < 0); its magnitude sqrt(|d|) equals
    2*|Im z| / y, which stays inside the field of z's coordinates.
    """
    sqrt_abs_d = abs(z.im) * Fraction(2, y)
    if d % 4 == 1:
        return point(Fraction(1, 2), 0) + Point(RealQuad(0), sqrt_abs_d / 2)
    return Point(RealQuad(0), sqrt_abs_d)


def classify_order(
    z: Point,
    u: Optional[Direction] = None,
    v: Optional[Direction] = None,
) -> OrderReport:
    """Full classification of Z + zZ against the maximal order of Q(z).

    Directions are optional; when omitted, the tangent data for the trig
    route is recovered from z itself (z lies on the line of direction u, and
    for k = 0 the squared tangent of the second angle equals m).
    """
    if z.im.is_zero():
        raise RealZ("z must not be real")
    k, m = trace_and_norm(z)
    pred = ring_predicate(z)
    if not pred.is_ring:
        detail = {"reason": "k and m are not both integers"}
        na = RouteTrace(applicable=False, verdict=None, detail=detail)
        return OrderReport(
            z=z, k=k, m=m, is_ring=False,
            discriminant=k * k - 4 * m,
            decomposition=None,
            field_label=_field_label_or_none(z),
            verdict=NOT_A_RING,
            route_lemma=na, route_trig=na,
        )

    ki = k.as_integer()
    mi = m.as_integer()
    disc = ki * ki - 4 * mi  # always negative for nonreal z
    dec = squarefree_decompose(disc)
    d, y = dec.core, dec.cofactor
    warnings: list[str] = []

    # route (a): direct membership of the maximal-order generator
    gen = _maximal_order_generator(d, z, y)
    coords = solve_lattice(gen, z)
    lemma_maximal = coords.is_integral()
    congruence_shortcut = (
        (d % 4 == 1 and y == 1 and ki % 2 == 1)
        or (d % 4 != 1 and y == 2 and ki % 2 == 0)
    )
    if congruence_shortcut != lemma_maximal:
        raise AssertionError(
            f"membership and congruence forms of the direct test disagree "
            f"for z={z}")
    route_lemma = RouteTrace(
        applicable=True,
        verdict=MAXIMAL_ORDER if lemma_maximal else PROPER_SUBORDER,
        detail={
            "d": d,
            "y": y,
            "k_parity": "odd" if ki % 2 else "even",
            "generator": "(1+sqrt(d))/2" if d % 4 == 1 else "sqrt(d)",
            "generator_coords_integral": lemma_maximal,
        },
    )

    # route (b): tangent conditions
    route_trig, trig_warnings = _trig_route(z, ki, mi, d, u, v)
    warnings.extend(trig_warnings)
    if (route_trig.applicable and ki != 0
            and route_trig.verdict != route_lemma.verdict):
        warnings.append(
            f"trig route disagrees with direct membership for k={ki}")

    return OrderReport(
        z=z, k=k, m=m, is_ring=True,
        discriminant=RealQuad(disc),
        decomposition=dec,
        field_label=d,
        verdict=route_lemma.verdict or PROPER_SUBORDER,
        route_lemma=route_lemma,
        route_trig=route_trig,
        warnings=tuple(warnings),
    )


def _field_label_or_none(z: Point) -> Optional[int]:
    try:
        return field_of(z)
    except NotQuadratic:
        return None


def _tan_alpha_squared(z: Point, u: Optional[Direction]) -> Optional[Fraction]:
    """(tan alpha)^2 for the direction of z, as an exact rational.

    z = r*u for a real r, so the direction data is recoverable from z when
    u is not supplied. Returns None if the square is irrational (cannot
    happen for ring z with k != 0) or the direction is vertical.
    """
    if u is not None:
        vx, vy = u.vec.re, u.vec.im
    else:
        vx, vy = z.re, z.im
    if vx.is_zero():
        return None
    t2 = (vy * vy) / (vx * vx)
    if not t2.is_rational():
        return None
    return t2.as_fraction()


def _trig_route(
    z: Point,
    ki: int,
    mi: int,
    d: int,
    u: Optional[Direction],
    v: Optional[Direction],
) -> tuple[RouteTrace, list[str]]:
    warnings: list[str] = []
    if ki != 0:
        t2 = _tan_alpha_squared(z, u)
        if t2 is None:
            return RouteTrace(False, None, {"reason": "tan(alpha) not available"}), []
        if ki % 2 == 1:
            quantity = Fraction(ki * ki) * t2  # (k tan alpha)^2
            label = "(k*tan(alpha))^2"
            if quantity.denominator != 1:
                raise AssertionError("tangent quantity must be integral here")
            q = quantity.numerator
            sf = squarefree_decompose(q).cofactor == 1 if q > 0 else False
            verdict = MAXIMAL_ORDER if sf else PROPER_SUBORDER
            detail = {label: q, "squarefree": sf, "congruence": "none (k odd)"}
        else:
            quantity = Fraction(ki * ki, 4) * t2  # ((k/2) tan alpha)^2
            label = "((k/2)*tan(alpha))^2"
            if quantity.denominator != 1:
                raise AssertionError("tangent quantity must be integral here")
            q = quantity.numerator
            sf = squarefree_decompose(q).cofactor == 1 if q > 0 else False
            # congruence on the signed core: -q != 1 mod 4, i.e. q = 1, 2 mod 4
            ok_signed = sf and (-q) % 4 != 1
            ok_printed = sf and q % 4 in (2, 3)
            verdict = MAXIMAL_ORDER if ok_signed else PROPER_SUBORDER
            detail = {
                label: q,
                "squarefree": sf,
                "congruence": ("-%d mod 4 != 1" % q) if sf
                               else "moot (not squarefree)",
                "printed_congruence_verdict":
                    MAXIMAL_ORDER if ok_printed else PROPER_SUBORDER,
            }
            if ok_printed != ok_signed:
                warnings.append(
                    "even-k congruence read on the positive tangent quantity "
                    f"({q} mod 4 = {q % 4}) would flip the verdict; the signed "
                    "squarefree core is used")
        return RouteTrace(True, verdict, detail), warnings

    # k = 0: z = i*r with r^2 = m = tan(beta)^2
    t2 = Fraction(mi)
    q = t2.numerator
    sf = squarefree_decompose(q).cofactor == 1 if q > 0 else False
    ok_printed = sf and q % 4 in (2, 3)      # literal reading on tan^2(beta)
    ok_signed = sf and (-q) % 4 != 1         # reading on the field label -q
    verdict = MAXIMAL_ORDER if ok_printed else PROPER_SUBORDER
    detail = {
        "tan(beta)^2": q,
        "squarefree": sf,
        "printed_congruence_verdict": verdict,
        "signed_core_verdict": MAXIMAL_ORDER if ok_signed else PROPER_SUBORDER,
    }
    if ok_printed != ok_signed:
        warnings.append(
            "k=0 congruence ambiguity: tan(beta)^2 = %d is %d mod 4 but the "
            "field label is %d; direct membership decides the verdict"
            % (q, q % 4, -q))
    return RouteTrace(True, verdict, detail), warnings


# ---------------------------------------------------------------------------
# ring-producing constructions from a rational cosine
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BetaConstruction:
    s: int
    t: int
    z: Point
    u_dir: Direction
    v_dir: Direction
    k: int
    m: int


def construct_from_cos(s: int, t: int) -> BetaConstruction:
    """Directions whose lattice is a ring, from cos(alpha) = s/t.

    Chooses Re z = s and |z| = t, so z = s + i*sqrt(t^2 - s^2) has integer
    trace 2s and norm t^2. Rejects non-coprime pairs: scaling (s, t) by g
    scales z by g and only generates a subring of the coprime construction.
    """
    if s <= 0 or t <= 0 or s >= t:
        raise InvalidFraction("need 0 < s < t")
    if gcd(s, t) != 1:
        raise InvalidFraction(
            "s and t must be coprime: a common factor g gives z' = g*z, "
            "which spans only a subring of the coprime lattice")
    h = RealQuad.sqrt(t * t - s * s)
    z = Point(RealQuad(s), h)
    u = Direction(z)
    v = Direction(Point(RealQuad(s - 1), h))
    return BetaConstruction(s=s, t=t, z=z, u_dir=u, v_dir=v, k=2 * s, m=t * t)
