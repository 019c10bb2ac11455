import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from origami.errors import DivisionByZero, MixedRadicand, ZeroInput
from origami.field import RealQuad, squarefree_decompose

from conftest import RADICANDS, rand_realquad


def rq(a, b=0, n=0):
    return RealQuad(Fraction(a), Fraction(b), n)


class TestArithmetic:
    def test_conjugate_product(self):
        # (1 + sqrt(7)) (1 - sqrt(7)) = 1 - 7
        assert rq(1, 1, 7) * rq(1, -1, 7) == rq(-6)

    def test_self_division(self):
        assert rq(0, 1, 3) / rq(0, 1, 3) == rq(1)

    def test_reciprocal_by_rationalization(self):
        x = rq(1, 1, 2)
        inv = 1 / x
        assert inv == rq(-1, 1, 2)
        # oracle: multiplying back must give 1 exactly
        assert x * inv == rq(1)

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            rq(1) / rq(0)
        with pytest.raises(ZeroDivisionError):
            rq(2, 3, 5).__truediv__(rq(0, 0, 5))

    def test_mixed_radicand_rejected(self):
        with pytest.raises(MixedRadicand):
            rq(0, 1, 2) + rq(0, 1, 3)
        with pytest.raises(MixedRadicand):
            rq(1, 2, 5) * rq(0, 1, 7)

    def test_rational_values_mix_with_any_radicand(self):
        assert rq(1, 0, 5) + rq(0, 1, 7) == rq(1, 1, 7)

    def test_radicand_folding(self):
        assert rq(0, 1, 56) == rq(0, 2, 14)
        assert rq(0, 1, 9) == rq(3)
        assert rq(0, 5, 4) == rq(10)
        assert rq(2, 3, 1) == rq(5)
        assert rq(2, 3, 0) == rq(2)


class TestSign:
    def test_zero(self):
        assert rq(0, 0, 5).sign() == 0

    def test_mixed_sign_cases(self):
        # sqrt(5) > 2 so -2 + sqrt(5) > 0; oracle is the square comparison
        assert rq(-2, 1, 5).sign() == 1
        assert 5 > 2 * 2
        # 3 - 2 sqrt(2) > 0 since 9 > 8
        assert rq(3, -2, 2).sign() == 1
        assert 3 * 3 > 2 * 2 * 2
        assert rq(-3, 2, 2).sign() == -1
        assert rq(1, -1, 2).sign() == -1

    def test_sign_agrees_with_high_precision_float(self):
        from mpmath import mp, mpf
        rng = random.Random(7)
        with mp.workprec(200):
            for _ in range(10_000):
                n = rng.choice(RADICANDS)
                v = rand_realquad(rng, n)
                approx = (mpf(v.rat.numerator) / v.rat.denominator
                          + mpf(v.irr.numerator) / v.irr.denominator
                          * mp.sqrt(v.radicand))
                expected = 0 if approx == 0 else (1 if approx > 0 else -1)
                assert v.sign() == expected

    def test_total_order_within_a_field(self):
        assert rq(0, 1, 2) < rq(Fraction(3, 2)) < rq(0, 2, 2)
        assert rq(1, 1, 7) > rq(3)
        assert sorted([rq(3), rq(0, 1, 7), rq(0, 2, 7)]) == \
            [rq(0, 1, 7), rq(3), rq(0, 2, 7)]


class TestIntegrality:
    def test_examples(self):
        assert rq(10, 0, 14).is_integer()
        assert not rq(Fraction(1, 2), 0, 2).is_integer()
        assert not rq(0, 1, 2).is_integer()
        assert rq(10, 0, 14).as_integer() == 10


class TestSquarefreeDecompose:
    def test_discriminant_of_the_suborder_example(self):
        dec = squarefree_decompose(-224)
        assert (dec.core, dec.cofactor) == (-14, 4)
        assert dec.cofactor ** 2 * dec.core == -224

    def test_already_squarefree(self):
        dec = squarefree_decompose(-7)
        assert (dec.core, dec.cofactor) == (-7, 1)

    def test_perfect_square_times_sign(self):
        dec = squarefree_decompose(-4)
        assert (dec.core, dec.cofactor) == (-1, 2)

    def test_zero_rejected(self):
        with pytest.raises(ZeroInput):
            squarefree_decompose(0)

    @pytest.mark.parametrize("value", list(range(-60, 61, 7)) + [360, -360, 9800])
    def test_against_trial_division_oracle(self, value):
        if value == 0:
            return
        dec = squarefree_decompose(value)
        assert dec.cofactor >= 1
        assert dec.cofactor ** 2 * dec.core == value
        assert (dec.core > 0) == (value > 0)
        # no prime square divides the core
        d = abs(dec.core)
        p = 2
        while p * p <= d:
            assert d % (p * p) != 0
            p += 1


# hypothesis strategies for exact field elements
_fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def realquads(draw, radicand=None):
    n = radicand if radicand is not None else draw(st.sampled_from(RADICANDS))
    a = draw(_fracs)
    b = draw(_fracs) if n > 1 else Fraction(0)
    return RealQuad(a, b, n if b else 0)


class TestFieldAxioms:
    @settings(max_examples=200, deadline=None, derandomize=True)
    @given(st.sampled_from(RADICANDS).flatmap(
        lambda n: st.tuples(realquads(n), realquads(n), realquads(n))))
    def test_ring_axioms(self, triple):
        a, b, c = triple
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + RealQuad(0) == a
        assert a * RealQuad(1) == a
        assert a - a == RealQuad(0)

    @settings(max_examples=200, deadline=None, derandomize=True)
    @given(realquads())
    def test_multiplicative_inverse(self, a):
        if a.is_zero():
            return
        assert a * a.inverse() == RealQuad(1)
        assert (1 / a) * a == RealQuad(1)

    @settings(max_examples=200, deadline=None, derandomize=True)
    @given(st.sampled_from(RADICANDS).flatmap(
        lambda n: st.tuples(realquads(n), realquads(n))))
    def test_canonical_uniqueness(self, pair):
        a, b = pair
        # equal values iff identical canonical fields
        assert (a == b) == ((a - b).is_zero())
        assert (a == b) == (a.key() == b.key())
        if a == b:
            assert hash(a) == hash(b)


class TestParsingRoundTrip:
    @pytest.mark.parametrize("text,expected", [
        ("5", rq(5)),
        ("-2/3", rq(Fraction(-2, 3))),
        ("1/2 + 3*sqrt(7)", rq(Fraction(1, 2), 3, 7)),
        ("1*sqrt(56)", rq(0, 2, 14)),
        ("sqrt(2)", rq(0, 1, 2)),
        ("-sqrt(2)", rq(0, -1, 2)),
        ("0 + 1*sqrt(3)", rq(0, 1, 3)),
        ("2 - 1/3*sqrt(5)", rq(2, Fraction(-1, 3), 5)),
    ])
    def test_parse(self, text, expected):
        from origami.parsing import parse_realquad
        assert parse_realquad(text) == expected

    def test_round_trip_of_canonical_rendering(self):
        from origami.parsing import parse_realquad
        rng = random.Random(3)
        for _ in range(300):
            n = rng.choice(RADICANDS)
            v = rand_realquad(rng, n)
            assert parse_realquad(str(v)) == v

    def test_malformed(self):
        from origami.errors import UsageError
        from origami.parsing import parse_realquad
        for bad in ("", "1..2", "sqrt(-3)", "1+2+3", "sqrt(2)+sqrt(3)", "x"):
            with pytest.raises(UsageError):
                parse_realquad(bad)
