"""Tests for Laurent polynomials, motivic classes, the class parser and Q(v)."""

import random
from fractions import Fraction

import pytest

from motivic_zeta.vpoly import (
    ClassParseError,
    DimensionUndefinedError,
    LaurentPoly,
    MotClass,
    RatFunc,
    euler_char,
    is_effective_of_dim,
    parse_class,
    parse_laurent,
    virtual_dim,
)
from tests.fixtures.random_models import random_laurent


class TestLaurentPoly:
    def test_canonical_storage(self):
        p = LaurentPoly({2: 1, 0: -1, 5: 0})
        assert p.terms == ((0, -1), (2, 1))
        assert p == LaurentPoly([(2, 1), (0, -1)])

    def test_zero_coefficients_dropped_after_arithmetic(self):
        p = LaurentPoly({1: 2})
        assert (p - p).is_zero()
        assert (p - p).terms == ()

    def test_degree_and_valuation(self):
        p = parse_laurent("u^-2 + 3*u^4")
        assert p.degree() == 4
        assert p.valuation() == -2
        assert p.leading_coefficient() == 3

    def test_degree_of_zero_raises(self):
        with pytest.raises(ValueError):
            LaurentPoly.zero().degree()

    def test_render(self):
        assert parse_laurent("1 + 22*u^2 + u^4").render() == "u^4 + 22*u^2 + 1"
        assert parse_laurent("-L").render() == "-u^2"
        assert LaurentPoly.monomial(-2).render() == "u^-2"
        assert LaurentPoly.zero().render() == "0"

    def test_substitute_power(self):
        assert parse_laurent("u^2 - u").substitute_power(3) == parse_laurent("u^6 - u^3")

    def test_negative_power_of_monomial(self):
        assert LaurentPoly.monomial(2) ** -1 == LaurentPoly.monomial(-2)

    def test_negative_power_of_non_monomial_raises(self):
        with pytest.raises(ValueError):
            parse_laurent("u + 1") ** -1

    def test_ring_axioms_randomized(self):
        rng = random.Random(20240501)
        one = LaurentPoly.one()
        for _ in range(1000):
            a, b, c = (random_laurent(rng) for _ in range(3))
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a * one == a
            assert a - a == LaurentPoly.zero()


class TestMotClass:
    def test_lefschetz_is_u_squared(self):
        assert MotClass.lefschetz().poly == LaurentPoly.monomial(2)
        assert MotClass.lefschetz(-1).poly == LaurentPoly.monomial(-2)

    def test_int_coercion(self):
        c = parse_class("L - 1")
        assert (c + 1) == MotClass.lefschetz()
        assert 2 * c == c + c

    def test_times_lefschetz(self):
        assert parse_class("u").times_lefschetz(2) == parse_class("u^5")

    def test_euler_char(self):
        assert euler_char(parse_class("u^4 + 22*u^2 + 1")) == 24
        assert euler_char(parse_class("L - 1")) == 0
        assert euler_char(parse_class("1 - 2*u + u^2")) == 0

    def test_euler_char_is_ring_homomorphism(self):
        rng = random.Random(20240502)
        for _ in range(500):
            a, b = (MotClass.of(random_laurent(rng)) for _ in range(2))
            assert euler_char(a * b) == euler_char(a) * euler_char(b)
            assert euler_char(a + b) == euler_char(a) + euler_char(b)
        assert euler_char(MotClass.one()) == 1

    def test_virtual_dim(self):
        assert virtual_dim(parse_class("u^4 + 22*u^2 + 1")) == 2
        assert virtual_dim(parse_class("L - 1")) == 1
        assert virtual_dim(parse_class("-L")) is None
        assert virtual_dim(parse_class("u^3")) is None

    def test_virtual_dim_of_zero_raises(self):
        with pytest.raises(DimensionUndefinedError):
            virtual_dim(MotClass.zero())

    def test_is_effective_of_dim(self):
        assert is_effective_of_dim(parse_class("u^2 + 1"), 1)
        assert not is_effective_of_dim(parse_class("u^2 + 1"), 2)
        assert not is_effective_of_dim(MotClass.zero(), 0)


class TestParser:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("L-1", "u^2 - 1"),
            ("1-2*u+u^2", "u^2 - 2*u + 1"),
            ("3*(L-1)", "3*u^2 - 3"),
            ("(L+1)^2", "u^4 + 2*u^2 + 1"),
            ("L^-1", "u^-2"),
            ("-(u - 1)", "-u + 1"),
            ("  22 * u ^ 2 ", "22*u^2"),
            ("0", "0"),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_laurent(text).render() == expected

    def test_round_trip_through_render(self):
        rng = random.Random(7)
        for _ in range(200):
            p = random_laurent(rng)
            assert parse_laurent(p.render()) == p

    def test_decimal_coefficient_rejected(self):
        with pytest.raises(ClassParseError, match="non-integer coefficient") as err:
            parse_class("1.5*L")
        assert err.value.position == 0

    def test_division_rejected(self):
        with pytest.raises(ClassParseError, match="non-integer coefficient"):
            parse_class("L/2")

    def test_position_reported(self):
        with pytest.raises(ClassParseError) as err:
            parse_class("L + * 1")
        assert err.value.position == 4
        assert "syntax error at position 4" in str(err.value)

    def test_unbalanced_parenthesis(self):
        with pytest.raises(ClassParseError, match="expected '\\)'"):
            parse_class("(L - 1")

    def test_empty_expression(self):
        with pytest.raises(ClassParseError, match="empty expression"):
            parse_class("   ")

    def test_negative_exponent_on_sum(self):
        with pytest.raises(ClassParseError, match="negative exponent"):
            parse_class("(L - 1)^-1")


class TestRatFunc:
    def test_field_arithmetic(self):
        v = RatFunc.monomial(1)
        one = RatFunc.one()
        x = (v + one) / (v - one)
        assert x * (v - one) == v + one

    def test_from_laurent_negative_exponents(self):
        p = parse_laurent("u^-2 + 1")
        assert RatFunc.from_laurent(p) * RatFunc.monomial(2) == RatFunc.from_laurent(
            parse_laurent("u^2 + 1")
        )

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            RatFunc.one() / RatFunc.zero()

    def test_normalized_pair(self):
        x = RatFunc.from_scalar(Fraction(1, 2)) / (RatFunc.monomial(1) * 2)
        assert x.denominator == [Fraction(1), Fraction(0)]
        assert x.numerator == [Fraction(1, 4)]

    def test_hash_consistent_with_equality(self):
        v = RatFunc.monomial(1)
        assert hash((v * v) / v) == hash(v)

    def test_quotient_times_inverse_is_one(self):
        rng = random.Random(20240503)
        checked = 0
        while checked < 200:
            a, b = random_laurent(rng), random_laurent(rng)
            if a.is_zero() or b.is_zero():
                continue
            x, y = RatFunc.from_laurent(a), RatFunc.from_laurent(b)
            assert (x / y) * (y / x) == RatFunc.one()
            checked += 1
