from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from debell.asymptotics import (
    BaseSequence,
    IntPartition,
    bell_asymptotic_estimate,
    bell_base,
    geometric_base,
    hsu_expansion,
    partitions_with_parts,
    w_coefficient,
    w_explicit,
)
from debell.bell import bell_lambda1
from debell.exact import ParamSet, binomial, falling


def partition_count(n, k):
    # independent recurrence p(n,k) = p(n-1,k-1) + p(n-k,k)
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0:
        return 0
    return partition_count(n - 1, k - 1) + partition_count(n - k, k)


class TestPartitions:
    def test_hand_cases(self):
        two_parts = {p.mult for p in partitions_with_parts(4, 2)}
        assert two_parts == {(0, 2, 0, 0), (1, 0, 1, 0)}  # 2+2 and 3+1
        assert [p.mult for p in partitions_with_parts(5, 5)] == [(5, 0, 0, 0, 0)]
        assert [p.mult for p in partitions_with_parts(5, 1)] == [(0, 0, 0, 0, 1)]
        assert partitions_with_parts(3, 5) == ()

    def test_invariants(self):
        for n in range(9):
            for k in range(n + 1):
                parts = partitions_with_parts(n, k)
                assert len(set(parts)) == len(parts)
                for p in parts:
                    assert p.total == n and p.parts == k

    def test_cardinality_matches_recurrence(self):
        for n in range(11):
            for k in range(n + 1):
                assert len(partitions_with_parts(n, k)) == partition_count(n, k)

    def test_int_partition_validation(self):
        IntPartition((1, 0, 1))
        with pytest.raises(ValueError):
            IntPartition((1, -1))


class TestWCoefficients:
    def test_all_ones_base_formula(self):
        p = ParamSet.make(0, 1, 1, 1, 1, 0)
        b1 = bell_lambda1(1, p)
        for n in range(1, 8):
            assert w_coefficient(n, 0, p) == b1**n / factorial(n)

    def test_derivative_kills_first_coefficient(self):
        p = ParamSet.make(0, 1, 0, 1, 1, 0)
        assert w_coefficient(1, 0, p) == 0  # the base has b_1 = gamma = 0 here

    def test_explicit_matches_generic_up_to_f3(self):
        for p in [
            ParamSet.make(0, 1, 1, 1, 1, 0),
            ParamSet.make(0, 1, 2, 2, 1, 1),
            ParamSet.make(1, 2, 2, 1, 1, 2),
            ParamSet.make(2, 4, 0, 2, 1, 0),
        ]:
            for f in range(4):
                for n in range(f + 1, 13):
                    assert w_coefficient(n, f, p) == w_explicit(n, f, p), (p, f, n)

    def test_expanded_f4_f5_divergence_is_stable(self):
        # frozen from the first oracle run: where the expanded f=4 and f=5
        # forms stop matching the generic partition sum
        p = ParamSet.make(0, 1, 1, 1, 1, 0)
        agree4 = [n for n in range(5, 13) if w_coefficient(n, 4, p) == w_explicit(n, 4, p)]
        agree5 = [n for n in range(6, 13) if w_coefficient(n, 5, p) == w_explicit(n, 5, p)]
        assert agree4 == [5]
        assert agree5 == [6, 7]

    def test_bounds(self):
        p = ParamSet.make(0, 1, 1, 1, 1, 0)
        with pytest.raises(ValueError):
            w_coefficient(3, 3, p)
        with pytest.raises(ValueError):
            w_explicit(4, 6, p)


class TestBaseSequence:
    def test_requires_unit_constant(self):
        BaseSequence((1, 2, 3))
        with pytest.raises(ValueError):
            BaseSequence((0, 1))
        with pytest.raises(ValueError):
            BaseSequence(())

    def test_bell_base_values(self):
        p = ParamSet.make(0, 1, 1, 1, 1, 0)
        b = bell_base(p, 4)
        assert b[0] == 1
        for i in range(5):
            assert b[i] == bell_lambda1(i, p) / factorial(i)


class TestHsuExpansion:
    def test_first_order_is_exact(self):
        base = BaseSequence((1, Fraction(5, 3), 2))
        for delta in (7, 100, Fraction(13, 2)):
            assert hsu_expansion(base, delta, 1, 0) == base.b[1]

    def test_geometric_base_full_order_identity(self):
        base = geometric_base(8)
        for n in range(1, 7):
            for delta in (7, 19, 101, Fraction(15, 2)):
                expected = falling(delta + n - 1, n) / factorial(n) / falling(delta, n)
                assert hsu_expansion(base, delta, n, n - 1) == expected
                if isinstance(delta, int):
                    assert expected == Fraction(binomial(delta + n - 1, n)) / falling(delta, n)

    def test_preconditions(self):
        base = geometric_base(4)
        with pytest.raises(ValueError):
            hsu_expansion(base, 10, 0, 0)
        with pytest.raises(ValueError):
            hsu_expansion(base, 10, 3, 3)
        with pytest.raises(ValueError):
            hsu_expansion(base, 10, 5, 1)  # base only reaches index 4

    @given(
        st.integers(min_value=20, max_value=200),
        st.integers(min_value=1, max_value=6),
        st.integers(min_value=0, max_value=6),
    )
    def test_falling_factorial_bridge(self, delta, n, f):
        # (delta)_n / (delta-n+f)_f == (delta)_{n-f}, the step between the
        # ratio form and the weighted-sum form of the expansion
        if f <= n:
            assert falling(delta, n) / falling(delta - n + f, f) == falling(delta, n - f)


class TestBellEstimate:
    def test_first_order_exact(self):
        p = ParamSet.make(0, 1, 1, 1, 1, 0)
        for delta in (10, 100, 1000):
            cmp = bell_asymptotic_estimate(1, 0, delta, p)
            assert cmp.rel_error == 0
            assert cmp.estimate == cmp.exact == delta

    def test_full_order_is_a_finite_identity(self):
        # m = n-1 reproduces the exact scaled value for any unit-constant
        # base: the expansion is a terminating partition identity
        for p in [ParamSet.make(0, 1, 1, 1, 1, 0), ParamSet.make(1, 2, 2, 2, 1, 0)]:
            for n in (2, 3, 4):
                for delta in (50, 100):
                    cmp = bell_asymptotic_estimate(n, n - 1, delta, p)
                    assert cmp.status == "ok" and cmp.rel_error == 0

    def test_truncated_error_regression(self):
        # frozen from the first oracle run at (alpha,beta,gamma,x) = (0,1,1,1),
        # r = 0, n = 4, m = 2: the one-term truncation error per delta
        p = ParamSet.make(0, 1, 1, 1, 1, 0)
        observed = [bell_asymptotic_estimate(4, 2, d, p).rel_error for d in (100, 1000, 10000)]
        assert observed == [
            Fraction(1, 19315),
            Fraction(11, 201204605),
            Fraction(1, 18192731455),
        ]
        assert observed[0] > observed[1] > observed[2]

    def test_exact_zero_status(self):
        # r >= 1 makes the base start at 0 and the scaled exact value vanish
        p = ParamSet.make(0, 1, 0, 1, 1, 1)
        cmp = bell_asymptotic_estimate(1, 0, 100, p)
        assert cmp.status == "exact-zero"
        assert cmp.exact == 0 and cmp.rel_error is None
        assert cmp.estimate != 0

    def test_delta_validation(self):
        p = ParamSet.make(0, 1, 1, 1, 1, 0)
        with pytest.raises(ValueError):
            bell_asymptotic_estimate(4, 2, 3, p)  # delta below n
        with pytest.raises(ValueError):
            bell_asymptotic_estimate(4, 4, 100, p)  # m past n-1
