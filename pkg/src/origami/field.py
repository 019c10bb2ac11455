"""Exact scalar arithmetic: rationals, real quadratic irrationals a + b*sqrt(n),
and the squarefree decomposition used by the order classification.

Rational is an alias for fractions.Fraction: the stdlib type already keeps
values reduced with a positive denominator and orders them like real numbers,
which is exactly the contract needed here. RealQuad layers one square root on
top of that and keeps every operation exact; no floating point is used on any
correctness-critical path.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, MixedRadicand, ZeroInput

Rational = Fraction

_Scalar = Union["RealQuad", Fraction, int]


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """D = cofactor**2 * core with core squarefree and cofactor >= 1."""

    input: int
    core: int
    cofactor: int


def squarefree_decompose(value: int) -> SquarefreeDecomposition:
    """Split a nonzero integer into y*y*d with d squarefree, by trial division.

    Intended for desk-scale inputs (discriminants of small constructions);
    no attempt is made at sub-exponential factoring.
    """
    if value == 0:
        raise ZeroInput("cannot decompose 0 into a square times a squarefree part")
    d = abs(value)
    y = 1
    while d % 4 == 0:
        d //= 4
        y *= 2
    p = 3
    while p * p <= d:
        while d % (p * p) == 0:
            d //= p * p
            y *= p
        p += 2
    if value < 0:
        d = -d
    return SquarefreeDecomposition(input=value, core=d, cofactor=y)


def squarefree_core(value: int) -> int:
    return squarefree_decompose(value).core


class RealQuad:
    """An exact real number a + b*sqrt(n) with a, b rational, n squarefree >= 0.

    Canonical form: n is squarefree; if the value is rational then b = 0 and
    n = 0. Non-squarefree radicands given to the constructor are folded
    (sqrt(56) becomes 2*sqrt(14)), so structurally equal instances represent
    equal values and vice versa.
    """

    __slots__ = ("rat", "irr", "radicand")

    rat: Fraction
    irr: Fraction
    radicand: int

    def __init__(self, rat: _Scalar = 0, irr: _Scalar = 0, radicand: int = 0):
        if isinstance(rat, RealQuad):
            if irr != 0 or radicand != 0:
                raise TypeError("cannot re-wrap a RealQuad with extra parts")
            rat, irr, radicand = rat.rat, rat.irr, rat.radicand
        rat, irr, radicand = Fraction(rat), Fraction(irr), int(radicand)
        if radicand < 0:
            raise ValueError("radicand must be nonnegative (real field only)")
        if irr == 0 or radicand == 0:
            irr, radicand = Fraction(0), 0
        elif radicand == 1:
            rat, irr, radicand = rat + irr, Fraction(0), 0
        else:
            dec = squarefree_decompose(radicand)
            if dec.core == 1:
                rat, irr, radicand = rat + irr * dec.cofactor, Fraction(0), 0
            else:
                irr = irr * dec.cofactor
                radicand = dec.core
        self.rat = rat
        self.irr = irr
        self.radicand = radicand

    # -- constructors ----------------------------------------------------

    @classmethod
    def sqrt(cls, n: int) -> "RealQuad":
        """Exact square root of a nonnegative integer."""
        if n < 0:
            raise ValueError("sqrt of a negative integer is not real")
        return cls(0, 1, n)

    @classmethod
    def rational(cls, value: _Scalar) -> "RealQuad":
        if isinstance(value, RealQuad):
            return value
        return cls(Fraction(value))

    # -- canonical identity ----------------------------------------------

    def key(self):
        return (self.rat, self.irr, self.radicand)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.irr == 0 and self.rat == other
        if isinstance(other, RealQuad):
            return self.key() == other.key()
        return NotImplemented

    def __hash__(self):
        if self.irr == 0:
            return hash(self.rat)
        return hash(self.key())

    # -- radicand compatibility -------------------------------------------

    def _join(self, other: "RealQuad") -> int:
        """Common radicand for a binary operation, or raise MixedRadicand."""
        if self.radicand == 0:
            return other.radicand
        if other.radicand == 0 or other.radicand == self.radicand:
            return self.radicand
        raise MixedRadicand(
            f"cannot combine sqrt({self.radicand}) with sqrt({other.radicand})"
        )

    @staticmethod
    def _coerce(value: _Scalar) -> "RealQuad":
        if isinstance(value, RealQuad):
            return value
        if isinstance(value, (int, Fraction)):
            return RealQuad(value)
        return NotImplemented  # type: ignore[return-value]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: _Scalar) -> "RealQuad":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = self._join(other)
        return RealQuad(self.rat + other.rat, self.irr + other.irr, n)

    __radd__ = __add__

    def __sub__(self, other: _Scalar) -> "RealQuad":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = self._join(other)
        return RealQuad(self.rat - other.rat, self.irr - other.irr, n)

    def __rsub__(self, other: _Scalar) -> "RealQuad":
        return (-self) + other

    def __neg__(self) -> "RealQuad":
        return RealQuad(-self.rat, -self.irr, self.radicand)

    def __mul__(self, other: _Scalar) -> "RealQuad":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = self._join(other)
        rat = self.rat * other.rat + self.irr * other.irr * n
        irr = self.rat * other.irr + self.irr * other.rat
        return RealQuad(rat, irr, n)

    __rmul__ = __mul__

    def inverse(self) -> "RealQuad":
        """Multiplicative inverse via the conjugate: 1/(a+b*sqrt(n))."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        norm = self.rat * self.rat - self.irr * self.irr * self.radicand
        # norm vanishes only for the zero element when n is squarefree > 1
        return RealQuad(self.rat / norm, -self.irr / norm, self.radicand)

    def __truediv__(self, other: _Scalar) -> "RealQuad":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: _Scalar) -> "RealQuad":
        return self.inverse() * other

    def conjugate(self) -> "RealQuad":
        """Field conjugate a - b*sqrt(n) (identity on rationals)."""
        return RealQuad(self.rat, -self.irr, self.radicand)

    # -- predicates and exact order -----------------------------------------

    def is_zero(self) -> bool:
        return self.rat == 0 and self.irr == 0

    def is_rational(self) -> bool:
        return self.irr == 0

    def is_integer(self) -> bool:
        return self.irr == 0 and self.rat.denominator == 1

    def as_fraction(self) -> Fraction:
        if self.irr != 0:
            raise ValueError(f"{self} is irrational")
        return self.rat

    def as_integer(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return self.rat.numerator

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(n), with no floating point involved.

        When a and b have opposite signs the comparison reduces to
        a*a versus b*b*n, which is pure integer arithmetic.
        """
        a, b, n = self.rat, self.irr, self.radicand
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        sa = 1 if a > 0 else -1
        sb = 1 if b > 0 else -1
        if sa == sb:
            return sa
        lhs = a * a
        rhs = b * b * n
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    def __lt__(self, other: _Scalar) -> bool:
        other = self._coerce(other)
        return (self - other).sign() < 0

    def __le__(self, other: _Scalar) -> bool:
        other = self._coerce(other)
        return (self - other).sign() <= 0

    def __gt__(self, other: _Scalar) -> bool:
        other = self._coerce(other)
        return (self - other).sign() > 0

    def __ge__(self, other: _Scalar) -> bool:
        other = self._coerce(other)
        return (self - other).sign() >= 0

    def __abs__(self) -> "RealQuad":
        return -self if self.sign() < 0 else self

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __float__(self) -> float:
        return float(self.rat) + float(self.irr) * math.sqrt(self.radicand)

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        if self.irr == 0:
            return _frac_str(self.rat)
        head = "" if self.rat == 0 else _frac_str(self.rat) + (
            " - " if self.irr < 0 else " + "
        )
        coeff = abs(self.irr) if self.rat != 0 else self.irr
        return f"{head}{_frac_str(coeff)}*sqrt({self.radicand})"

    def __repr__(self) -> str:
        return f"RealQuad({self.rat!r}, {self.irr!r}, {self.radicand})"


def _frac_str(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


RQ_ZERO = RealQuad(0)
RQ_ONE = RealQuad(1)
