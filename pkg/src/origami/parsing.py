"""Text grammars for exact scalars and direction specs.

Scalar literals (whitespace insignificant):

    R    ::= TERM | TERM ("+"|"-") TERM
    TERM ::= RAT | [RAT "*"] "sqrt(" UINT ")"
    RAT  ::= ["-"] UINT ["/" UINT]

Examples: "5", "-2/3", "1/2 + 3*sqrt(7)", "1*sqrt(56)", "sqrt(2)".
Radicands are folded to squarefree form on construction (sqrt(56) parses
to 2*sqrt(14)).

Direction specs:

    "i"                  the vertical direction (same as deg:90)
    "deg:A"              A in {0, 30, 45, 60, 90, 120, 135, 150}; only the
                         angles whose unit vectors are exact in one
                         quadratic field are admitted
    "tan:R"              the direction 1 + i*tan(alpha) for an exact tangent
    "vec:(R,R)"          a raw vector of two scalar literals

Direction lists are comma separated with commas inside vec:(...) respected.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import UsageError
from .field import RealQuad
from .geometry import Direction, Point, point

_RAT_RE = r"-?\d+(?:/\d+)?"
_TERM_RE = re.compile(
    rf"(?P<coef>{_RAT_RE})?(?P<root>(?(coef)\*?|)sqrt\((?P<rad>\d+)\))?$"
)


def parse_rational(text: str) -> Fraction:
    text = text.strip().replace("−", "-")
    if not re.fullmatch(_RAT_RE, text):
        raise UsageError(f"malformed rational literal: {text!r}")
    return Fraction(text)


def _parse_term(text: str) -> RealQuad:
    if text.startswith("-sqrt("):  # bare negated root, treated as -1*sqrt(..)
        return -_parse_term(text[1:])
    m = _TERM_RE.match(text)
    if not m or (m.group("coef") is None and m.group("root") is None):
        raise UsageError(f"malformed scalar term: {text!r}")
    coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
    if m.group("root"):
        return RealQuad(0, coef, int(m.group("rad")))
    return RealQuad(coef)


def parse_realquad(text: str) -> RealQuad:
    """Parse an exact scalar literal into canonical form."""
    s = re.sub(r"\s+", "", text.replace("−", "-"))
    if not s:
        raise UsageError("empty scalar literal")
    # split into at most two terms at a +/- that is not a leading sign
    split = None
    for pos in range(1, len(s)):
        if s[pos] in "+-" and s[pos - 1] not in "+-*/(":
            split = pos
            break
    if split is None:
        return _parse_term(s)
    left = _parse_term(s[:split])
    sign = 1 if s[split] == "+" else -1
    right = _parse_term(s[split + 1:])
    if left.radicand != 0 and right.radicand != 0:
        raise UsageError(f"scalar literal has two root terms: {text!r}")
    return left + (right * sign if sign < 0 else right)


# exact unit-vector table (up to real scaling) for the admitted angles
_DEG_VECTORS = {
    0: (RealQuad(1), RealQuad(0)),
    30: (RealQuad.sqrt(3), RealQuad(1)),
    45: (RealQuad(1), RealQuad(1)),
    60: (RealQuad(1), RealQuad.sqrt(3)),
    90: (RealQuad(0), RealQuad(1)),
    120: (RealQuad(-1), RealQuad.sqrt(3)),
    135: (RealQuad(-1), RealQuad(1)),
    150: (-RealQuad.sqrt(3), RealQuad(1)),
}


def parse_direction(spec: str) -> Direction:
    s = spec.strip()
    if s == "i":
        return Direction.imaginary_axis()
    if s.startswith("deg:"):
        try:
            angle = int(s[4:])
        except ValueError:
            raise UsageError(f"malformed angle in {spec!r}") from None
        if angle not in _DEG_VECTORS:
            raise UsageError(
                f"deg: accepts only {sorted(_DEG_VECTORS)} (exact angles); "
                f"got {angle}")
        vx, vy = _DEG_VECTORS[angle]
        return Direction(Point(vx, vy))
    if s.startswith("tan:"):
        slope = parse_realquad(s[4:])
        return Direction(Point(RealQuad(1), slope))
    if s.startswith("vec:"):
        body = s[4:].strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise UsageError(f"vec: needs a parenthesized pair, got {spec!r}")
        parts = _split_commas(body[1:-1])
        if len(parts) != 2:
            raise UsageError(f"vec: needs exactly two components: {spec!r}")
        p = point(parse_realquad(parts[0]), parse_realquad(parts[1]))
        if p.is_zero():
            raise UsageError("vec: direction vector must be nonzero")
        return Direction(p)
    raise UsageError(f"unknown direction spec {spec!r}")


def _split_commas(text: str) -> list[str]:
    parts = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_direction_list(text: str) -> list[Direction]:
    parts = [p for p in _split_commas(text) if p.strip()]
    if not parts:
        raise UsageError("empty direction list")
    return [parse_direction(p) for p in parts]


def parse_point(text: str) -> Point:
    """A point literal "re,im" with scalar-literal components."""
    parts = _split_commas(text)
    if len(parts) != 2:
        raise UsageError(f"point literal needs two components: {text!r}")
    return point(parse_realquad(parts[0]), parse_realquad(parts[1]))


def parse_window(text: str) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 4:
        raise UsageError("window needs x0,y0,x1,y1")
    vals = tuple(parse_rational(p) for p in parts)
    if vals[2] <= vals[0] or vals[3] <= vals[1]:
        raise UsageError("window must satisfy x0 < x1 and y0 < y1")
    return vals
