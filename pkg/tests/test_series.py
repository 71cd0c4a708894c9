from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from debell.series import TruncatedSeries, binpow

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=5)


def series_strategy(order, constant=None):
    head = st.just(constant) if constant is not None else rationals
    return st.tuples(head, *([rationals] * order)).map(TruncatedSeries)


class TestRingOps:
    def test_product_of_conjugates(self):
        one_plus = TruncatedSeries([1, 1, 0, 0])
        one_minus = TruncatedSeries([1, -1, 0, 0])
        assert (one_plus * one_minus).coeffs == (1, 0, -1, 0)

    def test_mul_by_one_is_identity(self):
        s = TruncatedSeries([3, Fraction(1, 2), -2, 5])
        assert s * TruncatedSeries.one(3) == s

    def test_scale_by_zero(self):
        s = TruncatedSeries([3, 1, 4])
        assert s.scale(0) == TruncatedSeries.zero(2)

    def test_order_mismatch_rejected(self):
        with pytest.raises(ValueError):
            TruncatedSeries.one(3) + TruncatedSeries.one(4)
        with pytest.raises(ValueError):
            TruncatedSeries.one(3) * TruncatedSeries.one(2)

    def test_truncate_and_derivative(self):
        s = TruncatedSeries([1, 2, 3, 4])
        assert s.truncate(1).coeffs == (1, 2)
        assert s.derivative().coeffs == (2, 6, 12)
        with pytest.raises(ValueError):
            s.truncate(9)

    @given(series_strategy(5), series_strategy(5))
    def test_mul_commutative(self, a, b):
        assert a * b == b * a

    @given(series_strategy(4), series_strategy(4), series_strategy(4))
    def test_mul_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)


class TestInverse:
    def test_geometric(self):
        geo = TruncatedSeries([1, -1] + [0] * 5).inverse()
        assert geo.coeffs == (1,) * 7

    def test_inverse_of_one(self):
        assert TruncatedSeries.one(4).inverse() == TruncatedSeries.one(4)

    def test_zero_constant_rejected(self):
        with pytest.raises(ValueError):
            TruncatedSeries([0, 1, 2]).inverse()

    @given(series_strategy(5, constant=Fraction(1)))
    def test_involution(self, a):
        assert a.inverse().inverse() == a

    @given(series_strategy(5, constant=Fraction(1)))
    def test_defining_product(self, a):
        assert a * a.inverse() == TruncatedSeries.one(5)


class TestExpLog:
    def test_exp_of_zero(self):
        assert TruncatedSeries.zero(4).exp() == TruncatedSeries.one(4)

    def test_log_of_geometric(self):
        geo = TruncatedSeries([1, -1] + [0] * 4).inverse()
        expected = [Fraction(0)] + [Fraction(1, n) for n in range(1, 6)]
        assert geo.log().coeffs == tuple(expected)

    def test_preconditions(self):
        with pytest.raises(ValueError):
            TruncatedSeries([1, 1]).exp()
        with pytest.raises(ValueError):
            TruncatedSeries([0, 1]).log()

    @given(series_strategy(5, constant=Fraction(1)))
    def test_exp_log_round_trip(self, a):
        assert a.log().exp() == a

    @given(series_strategy(5, constant=Fraction(0)))
    def test_log_exp_round_trip(self, a):
        assert a.exp().log() == a


class TestPowInt:
    def test_zero_exponent(self):
        s = TruncatedSeries([2, 1, 1])
        assert s.pow_int(0) == TruncatedSeries.one(2)

    def test_matches_repeated_mul(self):
        s = TruncatedSeries([1, 2, -1, Fraction(1, 3), 0])
        assert s.pow_int(3) == s * s * s

    def test_high_valuation_shortcut(self):
        t = TruncatedSeries.monomial(1, 1, 4)
        assert t.pow_int(5) == TruncatedSeries.zero(4)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            TruncatedSeries.one(2).pow_int(-1)


class TestBinpow:
    def test_exponent_one(self):
        assert binpow(2, 2, 5).coeffs == (1, 2, 0, 0, 0, 0)

    def test_square(self):
        assert binpow(1, 2, 5).coeffs == (1, 2, 1, 0, 0, 0)

    def test_degenerate_limit(self):
        assert binpow(0, 1, 6).coeffs == tuple(Fraction(1, factorial(n)) for n in range(7))

    @given(rationals, rationals, rationals)
    def test_exponent_additivity(self, alpha, c1, c2):
        order = 6
        product = binpow(alpha, c1, order) * binpow(alpha, c2, order)
        assert product == binpow(alpha, c1 + c2, order)

    @given(rationals, rationals)
    def test_exponent_additivity_degenerate_case(self, c1, c2):
        order = 6
        product = binpow(0, c1, order) * binpow(0, c2, order)
        assert product == binpow(0, c1 + c2, order)

    @given(rationals, rationals)
    def test_defining_ode(self, alpha, c):
        # (1 + alpha t) * f' == c * f, the equation binpow solves
        order = 6
        f = binpow(alpha, c, order)
        lhs = TruncatedSeries([1, alpha] + [0] * (order - 2)) * f.derivative()
        rhs = f.truncate(order - 1).scale(c)
        assert lhs == rhs

    @given(rationals)
    def test_defining_ode_degenerate_case(self, c):
        # at alpha = 0 the equation collapses to f' == c * f
        order = 6
        f = binpow(0, c, order)
        assert f.derivative() == f.truncate(order - 1).scale(c)


class TestEgfCoeff:
    def test_exponential_reads_ones(self):
        e = binpow(0, 1, 6)
        assert [e.egf_coeff(n) for n in range(7)] == [1] * 7

    def test_geometric_reads_factorials(self):
        geo = TruncatedSeries([1, -1] + [0] * 4).inverse()
        assert [geo.egf_coeff(n) for n in range(6)] == [factorial(n) for n in range(6)]

    def test_linear(self):
        assert TruncatedSeries([1, 2, 0]).egf_coeff(1) == 2

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            TruncatedSeries([1, 2]).egf_coeff(5)
