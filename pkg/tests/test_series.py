from fractions import Fraction as Q
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import polys
from tuttekit.errors import PrecisionError
from tuttekit.poly import MultiPoly
from tuttekit.series import TruncSeries, deformed_exp_general, deformed_exponential

XY = ("X", "Y")


def series_from_polys(poly_list):
    return TruncSeries(tuple(poly_list))


class TestBasics:
    def test_constant_and_one(self):
        s = TruncSeries.constant(XY, 5, 3)
        assert s.coefficient(0) == MultiPoly.const(XY, 5)
        assert s.coefficient(2).is_zero()
        assert s.order == 3

    def test_mul_is_cauchy_product(self):
        one = MultiPoly.const(XY, 1)
        # (1 + z)^2 = 1 + 2z + z^2
        s = TruncSeries((one, one, MultiPoly.zero(XY)))
        sq = s * s
        assert sq.coefficient(1) == MultiPoly.const(XY, 2)
        assert sq.coefficient(2) == one


class TestExpLog:
    def test_exp_of_z(self):
        z = TruncSeries(
            (MultiPoly.zero(XY), MultiPoly.const(XY, 1))
            + tuple(MultiPoly.zero(XY) for _ in range(5))
        )
        e = z.exp()
        for k in range(e.order + 1):
            assert e.coefficient(k) == MultiPoly.const(XY, Q(1, factorial(k)))

    def test_exp_requires_zero_constant_term(self):
        s = TruncSeries.constant(XY, 1, 4)
        with pytest.raises(PrecisionError):
            s.exp()

    @given(
        st.lists(
            polys(XY, max_exp=2, max_terms=3),
            min_size=3,
            max_size=5,
        )
    )
    @settings(max_examples=30, deadline=None)
    def test_log_exp_round_trip(self, tail):
        coeffs = [MultiPoly.zero(XY)] + tail
        s = TruncSeries(tuple(coeffs))
        assert s.exp().log() == s

    @given(
        st.lists(
            polys(XY, max_exp=2, max_terms=3),
            min_size=3,
            max_size=5,
        )
    )
    @settings(max_examples=30, deadline=None)
    def test_exp_log_round_trip(self, tail):
        coeffs = [MultiPoly.const(XY, 1)] + tail
        s = TruncSeries(tuple(coeffs))
        assert s.log().exp() == s


class TestDeformedExponential:
    def test_coefficients_match_definition(self):
        # F(aZ, Y): coefficient of Z^n is a^n Y^C(n,2) / n!
        f = deformed_exponential(2, 6)
        for n in range(7):
            expected = MultiPoly(
                XY, {(0, comb(n, 2)): Q(2**n, factorial(n))}
            )
            assert f.coefficient(n) == expected

    def test_beta_power_and_alpha_y(self):
        # F(YZ, Y^2): coefficient of Z^n is Y^n (Y^2)^C(n,2) / n!
        f = deformed_exponential(1, 5, beta_power=2, alpha_y_power=1)
        for n in range(6):
            expected = MultiPoly(XY, {(0, n + 2 * comb(n, 2)): Q(1, factorial(n))})
            assert f.coefficient(n) == expected

    def test_general_form(self):
        alpha = MultiPoly(XY, {(1, 0): Q(1)})  # X
        beta = MultiPoly(XY, {(0, 1): Q(1)})  # Y
        f = deformed_exp_general(alpha, beta, 4)
        for n in range(5):
            expected = MultiPoly(XY, {(n, comb(n, 2)): Q(1, factorial(n))})
            assert f.coefficient(n) == expected


class TestPowPoly:
    def test_integer_exponent_matches_repeated_product(self):
        f = deformed_exponential(1, 5)
        three = MultiPoly.const(XY, 3)
        assert f.pow_poly(three) == f * f * f

    def test_power_law(self):
        f = deformed_exponential(2, 5)
        x = MultiPoly.var(XY, "X")
        lhs = f.pow_poly(x) * f.pow_poly(x)
        rhs = f.pow_poly(x * 2)
        assert lhs == rhs


class TestFilter:
    def test_filter_every_nth(self):
        one = MultiPoly.const(XY, 1)
        s = TruncSeries(tuple(one for _ in range(7)))
        f = s.filter_every_nth(3)
        for k in range(7):
            expected = one if k % 3 == 0 else MultiPoly.zero(XY)
            assert f.coefficient(k) == expected
