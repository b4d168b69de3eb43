"""Binomials, factorial products, Stirling arrays, and s,t polynomials."""

import doctest
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

import eulerward.numerics as numerics
from eulerward.numerics import (
    PolyST,
    assoc_stirling_subset,
    binomial,
    falling_factorial,
    rising_factorial,
    stirling_subset,
)

small_int = st.integers(min_value=-30, max_value=30)
small_nat = st.integers(min_value=0, max_value=12)


def test_module_doctests():
    failures, _ = doctest.testmod(numerics)
    assert failures == 0


class TestBinomial:
    def test_nonnegative_matches_pascal_triangle(self):
        rows = [[1]]
        for n in range(1, 9):
            prev = rows[-1] + [0]
            rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, n + 1)])
        for n, row in enumerate(rows):
            for k, want in enumerate(row):
                assert binomial(n, k) == want

    def test_negative_k_vanishes(self):
        assert binomial(5, -1) == 0
        assert binomial(-5, -1) == 0
        assert binomial(0, -3) == 0

    def test_negative_upper_argument(self):
        # (-1 choose k) alternates; (-2 choose k) gives signed naturals
        assert [binomial(-1, k) for k in range(5)] == [1, -1, 1, -1, 1]
        assert [binomial(-2, k) for k in range(5)] == [1, -2, 3, -4, 5]
        assert binomial(-2, 3) == -4

    def test_out_of_range_on_natural_rows(self):
        assert binomial(3, 4) == 0
        assert binomial(0, 1) == 0

    @given(small_int, st.integers(min_value=-5, max_value=30))
    def test_pascal_identity_everywhere(self, n, k):
        assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


class TestFactorialProducts:
    def test_rising_small(self):
        assert rising_factorial(3, 0) == 1
        assert rising_factorial(3, 4) == 3 * 4 * 5 * 6
        assert rising_factorial(0, 3) == 0
        assert rising_factorial(-2, 4) == (-2) * (-1) * 0 * 1

    def test_falling_small(self):
        assert falling_factorial(5, 2) == 20
        assert falling_factorial(5, 6) == 0
        assert falling_factorial(-1, 3) == (-1) * (-2) * (-3)

    def test_fraction_arguments_stay_exact(self):
        x = Fraction(1, 2)
        assert rising_factorial(x, 3) == Fraction(1 * 3 * 5, 8)
        assert falling_factorial(x, 2) == Fraction(-1, 4)

    @given(small_int, small_nat, small_nat)
    def test_rising_concatenation(self, x, j, m):
        assert rising_factorial(x, j) * rising_factorial(x + j, m) == rising_factorial(x, j + m)

    @given(small_int, small_nat)
    def test_falling_is_mirrored_rising(self, x, j):
        assert falling_factorial(x, j) == (-1) ** j * rising_factorial(-x, j)


class TestStirlingArrays:
    def test_subset_numbers_small(self):
        assert stirling_subset(0, 0) == 1
        assert stirling_subset(4, 2) == 7
        assert stirling_subset(5, 3) == 25
        assert stirling_subset(3, 0) == 0
        assert stirling_subset(3, 5) == 0

    def test_subset_orthogonality_with_falling_factorials(self):
        # sum_k {n,k} x^(k falling) telescopes back to x^n
        for x in range(1, 7):
            for n in range(0, 9):
                total = sum(
                    stirling_subset(n, k) * falling_factorial(x, k) for k in range(n + 1)
                )
                assert total == x**n

    def test_associated_rows_frozen(self):
        rows = [
            [1],
            [0, 0],
            [0, 1, 0],
            [0, 1, 0, 0],
            [0, 1, 3, 0, 0],
            [0, 1, 10, 0, 0, 0],
            [0, 1, 25, 15, 0, 0, 0],
        ]
        for n, row in enumerate(rows):
            for k, want in enumerate(row):
                assert assoc_stirling_subset(n, k) == want

    def test_associated_blocks_need_two_elements(self):
        assert assoc_stirling_subset(3, 2) == 0
        assert assoc_stirling_subset(2, 1) == 1
        assert assoc_stirling_subset(7, 3) == 105


class TestPolyST:
    def test_render_golden(self):
        p = (PolyST.s() + PolyST.t()) * PolyST.s() + 3
        assert p.render() == "3*s^0*t^0+1*s^1*t^1+1*s^2*t^0"
        assert PolyST.constant(0).render() == "0"

    def test_equality_and_int_coercion(self):
        assert PolyST.constant(5) == 5
        assert PolyST.s() - PolyST.s() == 0
        assert PolyST.s() != PolyST.t()

    def test_power(self):
        p = (PolyST.s() + 1) ** 3
        assert p.evaluate(2, 0) == 27

    @given(
        st.integers(min_value=-9, max_value=9),
        st.integers(min_value=-9, max_value=9),
        st.integers(min_value=-9, max_value=9),
        small_int,
        small_int,
    )
    def test_evaluate_is_a_ring_homomorphism(self, a, b, c, s0, t0):
        p = a * PolyST.s() + b * PolyST.t() + c
        q = PolyST.s() * PolyST.t() - a
        assert (p + q).evaluate(s0, t0) == p.evaluate(s0, t0) + q.evaluate(s0, t0)
        assert (p * q).evaluate(s0, t0) == p.evaluate(s0, t0) * q.evaluate(s0, t0)
        assert (-p).evaluate(s0, t0) == -p.evaluate(s0, t0)

    def test_hashable_and_immutable(self):
        p = PolyST.s() * 2
        assert hash(p) == hash(PolyST.s() + PolyST.s())
        try:
            p.x = 1
        except AttributeError:
            pass
        else:
            raise AssertionError("PolyST should reject attribute writes")
