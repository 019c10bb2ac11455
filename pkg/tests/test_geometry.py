import random
from fractions import Fraction

import pytest

from origami.errors import DuplicateDirections, ParallelDirections, SingularMap
from origami.field import RealQuad
from origami.geometry import (Direction, LinearMap, P_ONE, P_ZERO, Point,
                              apply_map, cross, intersect,
                              normalize_directions, point, s_bracket)

from conftest import (RADICANDS, oracle_intersect, rand_direction,
                      rand_point, rand_nonaxis_direction)


def rq(a, b=0, n=0):
    return RealQuad(Fraction(a), Fraction(b), n)


class TestSBracket:
    def test_one_and_i(self):
        # s(1, i) = 1*conj(i) - conj(1)*i = -2i
        got = s_bracket(P_ONE, point(0, 1))
        assert got == point(0, -2)

    def test_diagonal_vanishes(self, rng):
        for n in RADICANDS:
            p = rand_point(rng, n)
            assert s_bracket(p, p) == P_ZERO

    def test_parallel_u_z_vanishes(self):
        # u = 1 + i sqrt(7) and z = (1 + i sqrt(7))/2 are parallel
        u = point(1, rq(0, 1, 7))
        z = point(Fraction(1, 2), rq(0, Fraction(1, 2), 7))
        assert s_bracket(u, z) == P_ZERO

    def test_antisymmetry_and_pure_imaginarity(self, rng):
        for n in RADICANDS:
            for _ in range(20):
                x = rand_point(rng, n)
                y = rand_point(rng, n)
                s = s_bracket(x, y)
                assert s.re.is_zero()
                assert s == -s_bracket(y, x)
                # relation to the real cross product: s = -2i cross(x, y)
                assert s.im == -2 * cross(x, y)


class TestDirection:
    def test_scaling_invariance(self):
        assert Direction(point(1, 1)) == Direction(point(-2, -2))
        assert Direction(point(3, 0)) == Direction(point(-5, 0))
        assert Direction(point(0, 2)) == Direction(point(0, -7))

    def test_mod_pi_identification(self):
        # opposite vectors carry the same line direction
        d1 = Direction(point(rq(0, 1, 3), 1))
        d2 = Direction(point(rq(0, -1, 3), -1))
        assert d1 == d2
        assert hash(d1) == hash(d2)

    def test_distinct_slopes_differ(self):
        assert Direction(point(1, 1)) != Direction(point(1, -1))
        assert Direction(point(1, 0)) != Direction(point(0, 1))

    def test_zero_vector_rejected(self):
        with pytest.raises(ValueError):
            Direction(P_ZERO)


class TestIntersect:
    def test_real_axis_meets_vertical(self):
        u = Direction.real_axis()
        v = Direction.imaginary_axis()
        got = intersect(u, v, P_ZERO, point(1, 1))
        assert got == P_ONE

    def test_sqrt7_configuration(self):
        u = Direction(point(1, rq(0, 1, 7)))
        v = Direction(point(-1, rq(0, 1, 7)))
        z = intersect(u, v, P_ZERO, P_ONE)
        assert z == point(Fraction(1, 2), rq(0, Fraction(1, 2), 7))

    def test_parallel_rejected(self):
        u = Direction(point(1, 1))
        v = Direction(point(-3, -3))
        with pytest.raises(ParallelDirections):
            intersect(u, v, P_ZERO, P_ONE)

    def test_against_parametric_oracle(self, rng):
        for n in RADICANDS:
            for _ in range(30):
                u = rand_direction(rng, n)
                v = rand_direction(rng, n)
                if u == v:
                    continue
                p = rand_point(rng, n)
                q = rand_point(rng, n)
                assert intersect(u, v, p, q) == oracle_intersect(u, v, p, q)

    def test_result_is_on_both_lines(self, rng):
        for n in RADICANDS:
            for _ in range(30):
                u = rand_direction(rng, n)
                v = rand_direction(rng, n)
                if u == v:
                    continue
                p = rand_point(rng, n)
                q = rand_point(rng, n)
                r = intersect(u, v, p, q)
                assert s_bracket(u.vec, r - p) == P_ZERO
                assert s_bracket(v.vec, r - q) == P_ZERO

    def test_swap_decomposition_linearity_closed_form(self, rng):
        one = P_ONE
        zero = P_ZERO
        for n in RADICANDS:
            for _ in range(20):
                u = rand_direction(rng, n)
                v = rand_direction(rng, n)
                if u == v:
                    continue
                p = rand_point(rng, n)
                q = rand_point(rng, n)
                # swap
                assert intersect(u, v, p, q) == intersect(v, u, q, p)
                # decomposition through the origin
                assert intersect(u, v, p, q) == \
                    intersect(u, v, p, zero) + intersect(u, v, zero, q)
                # additivity and rational homogeneity in the first slot
                assert intersect(u, v, p + q, zero) == \
                    intersect(u, v, p, zero) + intersect(u, v, q, zero)
                r = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
                assert intersect(u, v, p.scale(r), zero) == \
                    intersect(u, v, p, zero).scale(r)
                # closed form at (0, 1): (s_{v,1}/s_{v,u}) u
                coeff = cross(v.vec, one) / cross(v.vec, u.vec)
                assert intersect(u, v, zero, one) == u.vec.scale(coeff)

    def test_defined_for_equal_points(self):
        u = Direction(point(1, 1))
        v = Direction.imaginary_axis()
        p = point(2, 1)
        got = intersect(u, v, p, p)
        assert got == p  # both lines pass through p


class TestLinearMap:
    def test_identity(self, rng):
        t = LinearMap.identity()
        for _ in range(5):
            p = rand_point(rng, 7)
            assert apply_map(t, p) == p

    def test_quarter_turn(self):
        t = LinearMap(rq(0), rq(1), rq(-1), rq(0))
        assert t.apply(P_ONE) == point(0, -1)

    def test_inverse_round_trip(self, rng):
        for n in (0, 2, 5):
            for _ in range(10):
                entries = [rand_point(rng, n).re for _ in range(4)]
                try:
                    t = LinearMap(*entries)
                except SingularMap:
                    continue
                ti = t.inverse()
                for _ in range(5):
                    p = rand_point(rng, n)
                    assert ti.apply(t.apply(p)) == p

    def test_singular_rejected(self):
        with pytest.raises(SingularMap):
            LinearMap(rq(1), rq(2), rq(2), rq(4))

    def test_commutes_with_intersection(self, rng):
        for n in (0, 3, 7):
            for _ in range(10):
                u = rand_direction(rng, n)
                v = rand_direction(rng, n)
                if u == v:
                    continue
                p = rand_point(rng, n)
                q = rand_point(rng, n)
                entries = [rand_point(rng, n).re for _ in range(4)]
                try:
                    t = LinearMap(*entries)
                except SingularMap:
                    continue
                lhs = t.apply(intersect(u, v, p, q))
                rhs = intersect(t.apply_direction(u), t.apply_direction(v),
                                t.apply(p), t.apply(q))
                assert lhs == rhs


class TestNormalizeDirections:
    def test_axis_already_present(self):
        dirs = [Direction.real_axis(), Direction(point(1, 1)),
                Direction(point(0, 1))]
        out, t = normalize_directions(dirs)
        assert out == dirs
        assert t.apply(point(5, -3)) == point(5, -3)

    def test_vertical_first_becomes_quarter_turn(self):
        dirs = [Direction.imaginary_axis(), Direction(point(1, 1)),
                Direction(point(1, 2))]
        out, t = normalize_directions(dirs)
        assert out[0] == Direction.real_axis()
        # the map is ((0,1),(-1,0)): multiplication by -i
        assert (t.a, t.b, t.c, t.d) == (rq(0), rq(1), rq(-1), rq(0))

    def test_transform_commutes_with_construction(self, rng):
        for n in (0, 2, 5):
            for _ in range(10):
                dirs = []
                while len(dirs) < 3:
                    d = rand_nonaxis_direction(rng, n)
                    if d not in dirs:
                        dirs.append(d)
                out, t = normalize_directions(dirs)
                assert out[0] == Direction.real_axis()
                p = rand_point(rng, n)
                q = rand_point(rng, n)
                x = intersect(dirs[0], dirs[2], p, q)
                y = intersect(out[0], out[2], t.apply(p), t.apply(q))
                assert t.apply(x) == y

    def test_duplicates_rejected(self):
        d = Direction(point(1, 1))
        with pytest.raises(DuplicateDirections):
            normalize_directions([d, d, Direction.real_axis()])
