"""Shared helpers: seeded random exact values and an independent
line-intersection oracle (parametric solve, no bracket formula)."""
from __future__ import annotations

import random
from fractions import Fraction

import pytest

from origami.field import RealQuad
from origami.geometry import Direction, Point, point

RADICANDS = (0, 2, 3, 5, 7, 14)


def rand_fraction(rng: random.Random, span: int = 9, dmax: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, dmax))


def rand_realquad(rng: random.Random, radicand: int,
                  irrational_prob: float = 0.7) -> RealQuad:
    irr = rand_fraction(rng) if (radicand > 1 and rng.random() < irrational_prob) \
        else Fraction(0)
    return RealQuad(rand_fraction(rng), irr, radicand if irr else 0)


def rand_point(rng: random.Random, radicand: int) -> Point:
    return Point(rand_realquad(rng, radicand), rand_realquad(rng, radicand))


def rand_direction(rng: random.Random, radicand: int) -> Direction:
    while True:
        p = rand_point(rng, radicand)
        if not p.is_zero():
            return Direction(p)


def rand_nonaxis_direction(rng: random.Random, radicand: int) -> Direction:
    axis = Direction.real_axis()
    while True:
        d = rand_direction(rng, radicand)
        if d != axis:
            return d


def oracle_intersect(u: Direction, v: Direction, p: Point, q: Point) -> Point:
    """Independent oracle: solve p + t*u = q + s*v by Cramer's rule."""
    ux, uy = u.vec.re, u.vec.im
    vx, vy = v.vec.re, v.vec.im
    det = vx * uy - ux * vy
    assert not det.is_zero(), "oracle called with parallel directions"
    bx = q.re - p.re
    by = q.im - p.im
    t = (bx * (-vy) + vx * by) / det
    return Point(p.re + t * ux, p.im + t * uy)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260810)
