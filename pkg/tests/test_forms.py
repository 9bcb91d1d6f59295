"""Binary form arithmetic, parsing and root analysis."""

import random
from fractions import Fraction

import pytest

from hsfinite import (
    InhomogeneousInput,
    LinearChange,
    ParseError,
    SingularChange,
    binary_form,
    divides,
    form_divide,
    format_form,
    gcd_forms,
    monic,
    multiplicity_partition,
    multiply,
    parse_form,
    rational_root_points,
    scale,
    substitute,
)


def F(text):
    return parse_form(text)


def _random_form(rng, degree):
    while True:
        cs = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(degree + 1)]
        if any(cs):
            return binary_form(cs)


def _random_change(rng):
    while True:
        a, b, c, d = (rng.randint(-4, 4) for _ in range(4))
        if a * d - b * c != 0:
            return LinearChange(a, b, c, d)


class TestParsing:
    def test_mixed_term(self):
        f = F("x^2*y - 3/2*x*y^2")
        assert f.degree == 3
        # ascending x-power: (y^3, x y^2, x^2 y, x^3)
        assert f.coeffs == (Fraction(0), Fraction(-3, 2), Fraction(1), Fraction(0))

    def test_inhomogeneous_rejected(self):
        with pytest.raises(InhomogeneousInput):
            F("x^2 + y")

    def test_pure_power(self):
        f = F("y^3")
        assert f.degree == 3
        assert f.coeffs == (Fraction(1), Fraction(0), Fraction(0), Fraction(0))

    def test_syntax_errors(self):
        for bad in ("x^", "3/0*x", "x**y", "x +", "", "x^2 % y"):
            with pytest.raises(ParseError):
                F(bad)

    def test_whitespace_insensitive(self):
        assert F("x y") == F("x*y")
        assert F(" 3 / 2 * x ^ 2 ") == F("3/2*x^2")

    def test_leading_minus_and_constants(self):
        assert F("-x^2 + y^2").coeffs == (Fraction(1), Fraction(0), Fraction(-1))
        assert F("5").degree == 0
        assert F("0").is_zero
        assert F("x - x").is_zero

    def test_round_trip_random(self):
        rng = random.Random(3)
        for _ in range(200):
            f = _random_form(rng, rng.randint(0, 6))
            assert F(format_form(f)) == f

    def test_format_examples(self):
        assert format_form(F("x*y")) == "x*y"
        assert format_form(F("2*x^3 - y^3")) == "2*x^3 - y^3"
        assert format_form(scale(F("x"), Fraction(-1, 2))) == "-1/2*x"


class TestArithmetic:
    def test_multiply_examples(self):
        assert multiply(F("x"), F("y")) == F("x*y")
        assert multiply(F("x + y"), F("x - y")) == F("x^2 - y^2")
        # expansion oracle: (x + 2y)^2 = x^2 + 4xy + 4y^2
        assert multiply(F("x + 2*y"), F("x + 2*y")) == F("x^2 + 4*x*y + 4*y^2")

    def test_multiply_properties(self):
        rng = random.Random(4)
        for _ in range(50):
            f = _random_form(rng, rng.randint(0, 3))
            g = _random_form(rng, rng.randint(0, 3))
            h = _random_form(rng, rng.randint(0, 3))
            assert multiply(f, g) == multiply(g, f)
            assert multiply(multiply(f, g), h) == multiply(f, multiply(g, h))
            assert multiply(f, g).degree == f.degree + g.degree

    def test_substitute_examples(self):
        swap = LinearChange.swap()
        assert substitute(F("x^2"), swap) == F("y^2")
        assert substitute(F("x*y"), LinearChange(1, 1, 1, -1)) == F("x^2 - y^2")
        f = F("x^3 - 2*x*y^2 + y^3")
        assert substitute(f, LinearChange.identity()) == f

    def test_substitute_inverse_round_trip(self):
        rng = random.Random(5)
        for _ in range(200):
            f = _random_form(rng, rng.randint(1, 5))
            m = _random_change(rng)
            assert substitute(substitute(f, m), m.inverse()) == f

    def test_singular_change_rejected(self):
        with pytest.raises(SingularChange):
            LinearChange(1, 2, 2, 4)


class TestGcd:
    def test_examples(self):
        assert gcd_forms(F("x^2*y"), F("x*y^2")) == F("x*y")
        # factor oracle: (x-y)(x+y) vs (x+y)^2
        assert gcd_forms(F("x^2 - y^2"), F("x^2 + 2*x*y + y^2")) == F("x + y")
        from hsfinite import ZERO

        assert gcd_forms(F("2*x + 2*y"), ZERO) == F("x + y")
        with pytest.raises(ValueError):
            gcd_forms(ZERO, ZERO)

    def test_common_multiplier_factors_out(self):
        rng = random.Random(6)
        for _ in range(60):
            f = _random_form(rng, rng.randint(1, 3))
            g = _random_form(rng, rng.randint(1, 3))
            h = _random_form(rng, rng.randint(1, 2))
            lhs = gcd_forms(multiply(f, h), multiply(g, h))
            rhs = monic(multiply(gcd_forms(f, g), h))
            assert lhs == rhs

    def test_gcd_normalization_is_monic_from_top(self):
        g = gcd_forms(F("2*x^2"), F("6*x*y"))
        assert g == F("x")


class TestRootData:
    def test_partition_examples(self):
        assert multiplicity_partition(F("x^2*y")) == (2, 1)
        assert multiplicity_partition(F("x^3 + y^3")) == (1, 1, 1)
        assert multiplicity_partition(F("x^2 + 4*x*y + 4*y^2")) == (2,)

    def test_partition_sums_to_degree(self):
        rng = random.Random(7)
        for _ in range(100):
            f = _random_form(rng, rng.randint(1, 6))
            assert sum(multiplicity_partition(f)) == f.degree

    def test_partition_is_substitution_invariant(self):
        rng = random.Random(8)
        for _ in range(100):
            f = _random_form(rng, rng.randint(1, 5))
            m = _random_change(rng)
            assert multiplicity_partition(substitute(f, m)) == multiplicity_partition(f)

    def test_irrational_roots_counted_but_not_materialized(self):
        # x^2 - 2 y^2 has two conjugate roots: partition sees them, the
        # rational point list does not
        f = F("x^2 - 2*y^2")
        assert multiplicity_partition(f) == (1, 1)
        assert rational_root_points(f) == []

    def test_rational_root_points(self):
        f = multiply(multiply(F("x"), F("y")), F("2*x + 3*y"))
        pts = dict(rational_root_points(f))
        assert pts[(Fraction(0), Fraction(1))] == 1   # root of x
        assert pts[(Fraction(1), Fraction(0))] == 1   # root of y
        assert pts[(Fraction(1), Fraction(-2, 3))] == 1  # root of 2x + 3y
        sq = multiply(F("x - 5*y"), F("x - 5*y"))
        assert rational_root_points(sq) == [((Fraction(1), Fraction(1, 5)), 2)]


class TestDivision:
    def test_divides_examples(self):
        assert divides(F("x"), F("x^2*y"))
        assert divides(F("x + y"), F("x^3 + y^3"))
        assert not divides(F("x"), F("y^3"))

    def test_exact_quotient(self):
        q = form_divide(F("x^3 + y^3"), F("x + y"))
        assert q == F("x^2 - x*y + y^2")
        with pytest.raises(ValueError):
            form_divide(F("x^2"), F("y"))

    def test_divides_matches_product(self):
        rng = random.Random(9)
        for _ in range(60):
            f = _random_form(rng, rng.randint(0, 3))
            h = _random_form(rng, rng.randint(1, 3))
            assert divides(h, multiply(f, h))
            assert form_divide(multiply(f, h), h) == f
