import random
from fractions import Fraction

import pytest

from origami.closure import (expand, initial_state, run_closure,
                             six_identities_check, solve_lattice,
                             verify_lattice)
from origami.errors import (DegenerateBasis, DuplicateDirections,
                            MixedRadicand)
from origami.field import RealQuad
from origami.geometry import Direction, LinearMap, P_ONE, P_ZERO, point
from origami.parsing import parse_direction_list
from origami.ringcheck import compute_z

from conftest import rand_nonaxis_direction, rand_point


def dirs_of(spec):
    return parse_direction_list(spec)


class TestExpand:
    def test_first_generation_is_exactly_four_points(self, rng):
        # {0, 1, z, 1-z} after one step, for any admissible three directions
        for n in (0, 2, 3, 7):
            for _ in range(10):
                u = rand_nonaxis_direction(rng, n)
                v = rand_nonaxis_direction(rng, n)
                if u == v:
                    continue
                state = initial_state([Direction.real_axis(), u, v])
                state = expand(state)
                z = compute_z(u, v)
                assert state.point_set() == {P_ZERO, P_ONE, z, P_ONE - z}

    def test_single_direction_never_grows(self):
        state = initial_state(dirs_of("deg:45"))
        out = expand(state)
        assert out.points == state.points
        assert out.depth == 1

    def test_gaussian_closure_depth_3(self):
        dirs = dirs_of("deg:0,deg:45,deg:90")
        state = run_closure(dirs, 3)
        z = compute_z(dirs[1], dirs[2])
        assert z == point(1, 1)
        report = verify_lattice(state, z)
        assert report.all_integer
        assert point(0, 1) in state.point_set()

    def test_growth_is_monotone_and_depths_recorded(self):
        dirs = dirs_of("deg:0,deg:45,deg:90,deg:135")
        prev = initial_state(dirs)
        for depth in range(1, 4):
            nxt = expand(prev)
            assert set(prev.points) <= set(nxt.points)
            assert nxt.depth == depth
            fresh = nxt.points[len(prev.points):]
            assert all(d == depth for d in
                       nxt.depth_introduced[len(prev.points):])
            assert len(set(fresh)) == len(fresh)
            prev = nxt

    def test_known_generation_sizes(self):
        # brute-force Fraction oracle sizes for 0/45/90/135
        dirs = dirs_of("deg:0,deg:45,deg:90,deg:135")
        sizes = []
        state = initial_state(dirs)
        for _ in range(3):
            state = expand(state)
            sizes.append(len(state))
        assert sizes == [8, 39, 277]

    def test_truncation_flag_and_cap(self):
        dirs = dirs_of("deg:0,deg:45,deg:90,deg:135")
        state = initial_state(dirs)
        state = expand(state, max_points=20)  # full first generation: 8 < 20
        assert len(state) == 8
        assert not state.truncated
        state = expand(state, max_points=20)  # second generation has 39
        assert len(state) == 20
        assert state.truncated
        # the flag is sticky on later generations
        assert expand(state, max_points=50).truncated

    def test_duplicate_directions_rejected(self):
        d = Direction(point(1, 1))
        with pytest.raises(DuplicateDirections):
            initial_state([d, d])

    def test_mixed_radicands_rejected(self):
        with pytest.raises(MixedRadicand):
            initial_state(dirs_of("deg:30,tan:sqrt(7)"))

    def test_expand_result_is_set_deterministic(self):
        dirs = dirs_of("deg:0,deg:60,deg:150")
        a = run_closure(dirs, 3)
        b = run_closure(dirs, 3)
        assert a.points == b.points

    def test_gl2_commutation(self, rng):
        # transforming inputs and expanding equals expanding then transforming
        n = 2
        dirs = []
        while len(dirs) < 3:
            d = rand_nonaxis_direction(rng, n)
            if d not in dirs:
                dirs.append(d)
        t = LinearMap(RealQuad(1), RealQuad(1), RealQuad(0), RealQuad(1))
        seeds = [P_ZERO, rand_point(rng, n)]
        if seeds[1].is_zero():
            seeds[1] = P_ONE
        plain = run_closure(dirs, 2, seeds=seeds)
        moved = run_closure([t.apply_direction(d) for d in dirs], 2,
                            seeds=[t.apply(s) for s in seeds])
        assert {t.apply(p) for p in plain.points} == moved.point_set()


class TestSolveLattice:
    def test_simple_coordinates(self):
        z = point(1, 1)
        c = solve_lattice(P_ONE - z, z)
        assert (c.a, c.b) == (RealQuad(1), RealQuad(-1))
        c = solve_lattice(P_ZERO, z)
        assert (c.a, c.b) == (RealQuad(0), RealQuad(0))

    def test_real_basis_rejected(self):
        with pytest.raises(DegenerateBasis):
            solve_lattice(P_ONE, point(3, 0))

    def test_round_trip(self, rng):
        for n in (0, 3, 7):
            for _ in range(20):
                z = rand_point(rng, n)
                if z.im.is_zero():
                    continue
                p = rand_point(rng, n)
                c = solve_lattice(p, z)
                assert point(c.a, 0) + z.scale(c.b) == p

    def test_non_ring_lattice_still_integral(self):
        # 0/60/150: not a ring, but still an integer lattice in basis (1, z)
        dirs = dirs_of("deg:0,deg:60,deg:150")
        state = run_closure(dirs, 2)
        z = compute_z(dirs[1], dirs[2])
        report = verify_lattice(state, z)
        assert report.all_integer

    def test_four_direction_state_breaks_the_lattice(self):
        dirs = dirs_of("deg:0,deg:45,deg:90,deg:135")
        state = run_closure(dirs, 2)
        z = compute_z(dirs[1], dirs[2])
        report = verify_lattice(state, z)
        assert not report.all_integer
        assert report.violations

    def test_seed_coordinates_at_depth_zero(self):
        dirs = dirs_of("deg:0,deg:45,deg:90")
        state = initial_state(dirs)
        z = compute_z(dirs[1], dirs[2])
        report = verify_lattice(state, z)
        got = [(c.a, c.b) for c in report.coords]
        assert got == [(RealQuad(0), RealQuad(0)), (RealQuad(1), RealQuad(0))]

    def test_additive_group_closure_in_coordinates(self, rng):
        dirs = dirs_of("deg:0,deg:30,deg:90")
        state = run_closure(dirs, 3)
        z = compute_z(dirs[1], dirs[2])
        pts = list(state.points)
        for _ in range(50):
            a = rng.choice(pts)
            b = rng.choice(pts)
            c = solve_lattice(a + b, z)
            assert c.is_integral()


class TestSixIdentities:
    def test_45_90(self):
        report = six_identities_check(*dirs_of("deg:45,deg:90"))
        assert report.all_passed
        assert len(report.checks) == 12

    def test_sqrt7_pair(self):
        report = six_identities_check(*dirs_of("tan:sqrt(7),vec:(-1,1*sqrt(7))"))
        assert report.all_passed

    def test_duplicate_rejected(self):
        u, v = dirs_of("deg:45,deg:45")
        with pytest.raises(DuplicateDirections):
            six_identities_check(u, v)
        with pytest.raises(DuplicateDirections):
            six_identities_check(Direction.real_axis(), v)

    def test_random_pairs(self, rng):
        for n in (2, 3, 5):
            for _ in range(30):
                u = rand_nonaxis_direction(rng, n)
                v = rand_nonaxis_direction(rng, n)
                if u == v:
                    continue
                assert six_identities_check(u, v).all_passed
