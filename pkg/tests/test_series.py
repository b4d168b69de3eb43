"""Truncated power series and the generating-function identities."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerward.eulerian import Params, eulerian_table
from eulerward.series import (
    TruncSeries,
    binomial_unit_sums_check,
    egf_eulerian_coeffs,
    egf_order1_direct,
    egf_transform_check,
    egf_ward_coeffs,
    eulerian_ratio_expansion_check,
    second_order_ratio_expansion_check,
    t_nu_derivative_check,
    t_nu_series,
    tree_power_check,
)
from eulerward.ward import ward_table

K = 10

fracs = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)
series_coeffs = st.lists(fracs, min_size=K + 1, max_size=K + 1)


def mk(coeffs):
    return TruncSeries([Fraction(c) for c in coeffs])


class TestSeriesCore:
    def test_constructors(self):
        assert TruncSeries.one(3).coeffs == (1, 0, 0, 0)
        assert TruncSeries.x(3).coeffs == (0, 1, 0, 0)
        assert TruncSeries.zero(0).coeffs == (0,)

    def test_mul_is_truncated_convolution(self):
        a = mk([1, 1, 1])
        assert (a * a).coeffs == (1, 2, 3)

    def test_mixed_orders_refuse_to_combine(self):
        with pytest.raises(ValueError):
            TruncSeries.one(3) + TruncSeries.one(4)

    def test_scalars_broadcast(self):
        a = TruncSeries.x(2)
        assert (2 * a + 1).coeffs == (1, 2, 0)
        assert (a / 2).coeffs == (0, Fraction(1, 2), 0)

    def test_exp_log_inverse_each_other(self):
        f = TruncSeries([0, 1, Fraction(-1, 2), Fraction(1, 3), 0, Fraction(2, 7)])
        assert f.exp().log() == f
        assert f.exp().coefficient(0) == 1

    def test_exp_needs_zero_constant_term(self):
        with pytest.raises(ValueError):
            TruncSeries.one(3).exp()
        with pytest.raises(ValueError):
            TruncSeries.x(3).log()

    def test_exp_of_x_is_the_exponential(self):
        e = TruncSeries.x(6).exp()
        assert [e.coefficient(n) for n in range(7)] == [
            Fraction(1, math.factorial(n)) for n in range(7)
        ]

    def test_inverse(self):
        one_minus_x = 1 - TruncSeries.x(8)
        geo = one_minus_x.inverse()
        assert geo.coeffs == (1,) * 9
        assert (geo * one_minus_x).coeffs == (1,) + (0,) * 8

    def test_inverse_needs_a_unit(self):
        with pytest.raises(ValueError):
            TruncSeries.x(3).inverse()

    def test_pow_both_signs(self):
        f = 1 + TruncSeries.x(6)
        assert f**3 == f * f * f
        assert f**-2 == (f * f).inverse()
        assert f**0 == TruncSeries.one(6)

    def test_compose_needs_nilpotent_inner(self):
        with pytest.raises(ValueError):
            TruncSeries.x(3).compose(TruncSeries.one(3))

    def test_compose_geometric(self):
        # 1/(1-x) composed with 2x
        geo = (1 - TruncSeries.x(5)).inverse()
        doubled = geo.compose(2 * TruncSeries.x(5))
        assert doubled.coeffs == tuple(2**n for n in range(6))

    def test_zdz(self):
        f = TruncSeries([3, 1, 4, 1, 5])
        assert f.zdz().coeffs == (0, 1, 8, 3, 20)

    def test_reversion_of_x_is_x(self):
        assert TruncSeries.x(7).reversion() == TruncSeries.x(7)

    def test_reversion_needs_unit_linear_term(self):
        with pytest.raises(ValueError):
            (TruncSeries.x(4) * 0).reversion()

    def test_reversion_of_cayley_kernel(self):
        # the inverse of x e^(-x) has coefficients n^(n-1)/n!
        x = TruncSeries.x(9)
        f = x * (-x).exp()
        tr = f.reversion()
        for n in range(1, 10):
            assert tr.coefficient(n) == Fraction(n ** (n - 1), math.factorial(n))

    @settings(max_examples=40, deadline=None)
    @given(series_coeffs, series_coeffs)
    def test_ring_laws(self, a, b):
        f, g = mk(a), mk(b)
        assert f + g == g + f
        assert f * g == g * f
        assert f - f == TruncSeries.zero(K)
        assert (f + g) * g == f * g + g * g

    @settings(max_examples=40, deadline=None)
    @given(series_coeffs)
    def test_exp_homomorphism(self, a):
        f = mk(a)
        f = f - f.coefficient(0)  # drop the constant term
        assert (f + f).exp() == f.exp() * f.exp()

    @settings(max_examples=40, deadline=None)
    @given(series_coeffs)
    def test_reversion_inverts_composition(self, a):
        f = mk(a)
        f = f - f.coefficient(0)
        f = f - (f.coefficient(1) - 1) * TruncSeries.x(K)  # force linear term 1
        assert f.compose(f.reversion()) == TruncSeries.x(K)
        assert f.reversion().compose(f) == TruncSeries.x(K)


class TestTreeFunction:
    def test_order2_coefficients_are_cayley(self):
        T = t_nu_series(2, 9)
        for n in range(1, 10):
            assert T.coefficient(n) == Fraction(n ** (n - 1), math.factorial(n))

    def test_order1_is_plain_x(self):
        assert t_nu_series(1, 6) == TruncSeries.x(6)

    @pytest.mark.parametrize("nu", [1, 2, 3, 4])
    def test_derivative_identity(self, nu):
        assert t_nu_derivative_check(nu, 12)

    @pytest.mark.parametrize("s", [1, 2, 5])
    def test_powers_expand_over_shifted_cayley_terms(self, s):
        assert tree_power_check(s, 12)


class TestEgf:
    @pytest.mark.parametrize("nu", [1, 2, 3])
    @pytest.mark.parametrize("x0", [Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)])
    def test_eulerian_coefficients_evaluate_the_rows(self, nu, x0):
        for s, t in [(1, 0), (2, 1)]:
            table = eulerian_table(Params(nu, s, t), 6)
            got = egf_eulerian_coeffs(nu, s, t, x0, 6)
            for n in range(7):
                assert got[n] == sum(Fraction(c) * x0**k for k, c in enumerate(table.row(n)))

    def test_order1_direct_formula_agrees(self):
        for s, t in [(1, 0), (2, 1), (1, 2)]:
            for x0 in (Fraction(1, 3), Fraction(1, 2)):
                assert egf_order1_direct(s, t, x0, 7) == egf_eulerian_coeffs(1, s, t, x0, 7)

    def test_eulerian_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            egf_eulerian_coeffs(1, 0, 1, Fraction(1, 2), 4)
        with pytest.raises(ValueError):
            egf_eulerian_coeffs(1, 1, -1, Fraction(1, 2), 4)
        with pytest.raises(ValueError):
            egf_eulerian_coeffs(1, 1, 0, Fraction(1), 4)

    @pytest.mark.parametrize("nu", [1, 2])
    @pytest.mark.parametrize("x0", [Fraction(1, 2), Fraction(1)])
    def test_ward_coefficients_evaluate_the_rows(self, nu, x0):
        for s, t in [(1, 0), (2, 1)]:
            table = ward_table(Params(nu, s, t), 6)
            got = egf_ward_coeffs(nu, s, t, x0, 6)
            for n in range(7):
                assert got[n] == sum(Fraction(c) * x0**k for k, c in enumerate(table.row(n)))

    def test_ward_at_one_is_the_row_sum(self):
        got = egf_ward_coeffs(1, 1, 0, Fraction(1), 5)
        table = ward_table(Params(1, 1, 0), 5)
        assert got == [sum(table.row(n)) for n in range(6)]

    @pytest.mark.parametrize("nu", [1, 2])
    def test_substitution_links_the_two_families(self, nu):
        for x0 in (Fraction(1, 2), Fraction(1), Fraction(3)):
            assert egf_transform_check(nu, 1, 0, x0, 6)
            assert egf_transform_check(nu, 2, 1, x0, 6)


class TestRatioExpansions:
    @pytest.mark.parametrize("s,t", [(1, 0), (0, 1), (2, 3), (3, 1)])
    def test_order1(self, s, t):
        for n in range(5):
            assert eulerian_ratio_expansion_check(n, s, t, 11)

    @pytest.mark.parametrize("s,t", [(1, 0), (2, 1), (2, 3), (3, 1)])
    def test_order2(self, s, t):
        for n in range(5):
            assert second_order_ratio_expansion_check(n, s, t, 11)

    def test_order1_rejects_empty_weight(self):
        with pytest.raises(ValueError):
            eulerian_ratio_expansion_check(2, 0, 0, 8)

    def test_unit_sums(self):
        assert binomial_unit_sums_check(30)
