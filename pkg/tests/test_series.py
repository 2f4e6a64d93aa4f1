"""Exact asymptotic-series algebra: Bernoulli numbers, products, exponentials."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from psicert import (
    AsymptoticExpansion,
    UnsupportedOperationError,
    bernoulli,
    digamma_expansion,
    expansion,
    format_expansion,
    series_add,
    series_derivative,
    series_exp,
    series_mul,
    series_scale,
    series_sub,
    theta_expansion,
    trigamma_exp_digamma_expansion,
    trigamma_expansion,
)

F = Fraction


class TestBernoulli:
    def test_first_values(self):
        expected = {
            0: F(1),
            1: F(-1, 2),
            2: F(1, 6),
            4: F(-1, 30),
            6: F(1, 42),
            8: F(-1, 30),
            10: F(5, 66),
            12: F(-691, 2730),
        }
        for n, value in expected.items():
            assert bernoulli(n) == value

    def test_odd_indices_vanish(self):
        assert all(bernoulli(n) == 0 for n in range(3, 30, 2))

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            bernoulli(-1)

    def test_defining_recurrence(self):
        """sum_{k<n} C(n,k) B_k = 0 for n >= 2."""
        from math import comb

        for n in range(2, 20):
            assert sum(comb(n, k) * bernoulli(k) for k in range(n)) == 0


class TestExpansionType:
    def test_zero_coefficients_rejected(self):
        with pytest.raises(ValueError):
            AsymptoticExpansion(F(0), ((1, F(0)),), 4)

    def test_unsorted_keys_rejected(self):
        with pytest.raises(ValueError):
            AsymptoticExpansion(F(0), ((2, F(1)), (1, F(1))), 4)

    def test_coefficient_beyond_order_raises(self):
        e = expansion({1: 1}, 3)
        assert e.coeff(3) == 0
        with pytest.raises(ValueError):
            e.coeff(4)

    def test_low_degree_tracks_positive_powers(self):
        assert expansion({-2: 1, 1: 5}, 4).low_degree == 2
        assert expansion({1: 5}, 4).low_degree == 0

    def test_formatting(self):
        text = format_expansion(digamma_expansion(4))
        assert text == "ln(x) + 1/(2x) - 1/(12x^2) + 1/(120x^4) + O(x^-5)"


class TestNamedExpansions:
    def test_digamma_coefficients(self):
        e = digamma_expansion(10)
        assert e.log_coeff == 1
        assert e.coeff_map() == {
            1: F(1, 2),
            2: F(-1, 12),
            4: F(1, 120),
            6: F(-1, 252),
            8: F(1, 240),
            10: F(-1, 132),
        }

    def test_digamma_matches_bernoulli_formula(self):
        e = digamma_expansion(12)
        for k in range(2, 13):
            assert e.coeff(k) == -bernoulli(k) / k

    def test_trigamma_coefficients(self):
        e = trigamma_expansion(11)
        assert e.log_coeff == 0
        assert e.coeff_map() == {
            1: F(1),
            2: F(-1, 2),
            3: F(1, 6),
            5: F(-1, 30),
            7: F(1, 42),
            9: F(-1, 30),
            11: F(5, 66),
        }

    def test_trigamma_is_derivative_of_digamma(self):
        assert series_derivative(digamma_expansion(10)) == trigamma_expansion(11)

    def test_theta_expansion_values(self):
        th1 = theta_expansion(1, 7)
        th2 = theta_expansion(2, 7)
        # both agree with the trigamma expansion through x^-4 ...
        for k in range(1, 5):
            assert th1.coeff(k) == trigamma_expansion(7).coeff(k)
            assert th2.coeff(k) == trigamma_expansion(7).coeff(k)
        # ... and first deviate at x^-5 and x^-7 respectively
        assert trigamma_expansion(7).coeff(5) - th1.coeff(5) == F(1, 24)
        assert th2.coeff(5) == trigamma_expansion(7).coeff(5)
        assert trigamma_expansion(7).coeff(7) - th2.coeff(7) == F(-1, 45)

    def test_product_expansion(self):
        e = trigamma_exp_digamma_expansion(6)
        assert e.log_coeff == 0
        assert list(e.coeffs) == [
            (-1, F(1)),
            (0, F(1, 2)),
            (3, F(1, 90)),
            (4, F(-1, 60)),
            (5, F(2, 567)),
            (6, F(43, 2268)),
        ]
        assert e.coeff(1) == 0 and e.coeff(2) == 0


small_fracs = st.fractions(min_value=-9, max_value=9, max_denominator=12)


@st.composite
def plain_expansions(draw, min_key=-2, max_order=6):
    order = draw(st.integers(min_value=max(min_key + 1, 0), max_value=max_order))
    keys = draw(
        st.lists(
            st.integers(min_value=min_key, max_value=order), unique=True, max_size=5
        )
    )
    coeffs = {k: draw(small_fracs) for k in keys}
    return expansion(coeffs, order)


class TestAlgebra:
    def test_add_sub_scale(self):
        u = expansion({1: F(1, 2), 3: F(-1, 4)}, 5)
        v = expansion({1: F(1, 2), 2: F(2)}, 5)
        assert series_add(u, v).coeff_map() == {1: F(1), 2: F(2), 3: F(-1, 4)}
        assert series_sub(u, u).coeff_map() == {}
        assert series_scale(u, -2).coeff(3) == F(1, 2)

    @given(plain_expansions(), plain_expansions())
    def test_mul_matches_brute_force_convolution(self, u, v):
        result = series_mul(u, v)
        for k, coefficient in result.coeff_map().items():
            brute = sum(
                (
                    cu * cv
                    for i, cu in u.coeff_map().items()
                    for j, cv in v.coeff_map().items()
                    if i + j == k
                ),
                start=F(0),
            )
            assert coefficient == brute
        # spot-check a zero: every representable index not present must
        # genuinely convolve to zero
        for k in range(-result.low_degree, result.order + 1):
            if k not in result.coeff_map():
                brute = sum(
                    (
                        cu * cv
                        for i, cu in u.coeff_map().items()
                        for j, cv in v.coeff_map().items()
                        if i + j == k
                    ),
                    start=F(0),
                )
                assert brute == 0

    def test_mul_order_is_tight(self):
        u = expansion({-1: 1}, 3)  # x + O(x^-4)
        v = expansion({2: 1}, 5)  # x^-2 + O(x^-6)
        assert series_mul(u, v).order == min(3 + 2, 5 + (-1))

    def test_mul_rejects_log_terms(self):
        with pytest.raises(UnsupportedOperationError):
            series_mul(digamma_expansion(4), trigamma_expansion(4))

    @given(plain_expansions(min_key=1), plain_expansions(min_key=1))
    def test_exp_functional_equation(self, u, v):
        lhs = series_exp(series_add(u, v))
        rhs = series_mul(series_exp(u), series_exp(v))
        for k in range(0, min(lhs.order, rhs.order) + 1):
            assert lhs.coeff(k) == rhs.coeff(k)

    def test_exp_of_zero_is_one(self):
        e = series_exp(expansion({}, 5))
        assert e.coeff_map() == {0: F(1)}

    def test_exp_derivative_consistency(self):
        """(e^f)' = f' e^f, checked exactly through the common order."""
        f = expansion({1: F(1, 3), 2: F(-2, 5)}, 7)
        lhs = series_derivative(series_exp(f))
        rhs = series_mul(series_derivative(f), series_exp(f))
        for k in range(2, min(lhs.order, rhs.order) + 1):
            assert lhs.coeff(k) == rhs.coeff(k)

    def test_exp_rejects_constant_or_growing_terms(self):
        with pytest.raises(UnsupportedOperationError):
            series_exp(expansion({0: 1, 1: 1}, 4))
        with pytest.raises(UnsupportedOperationError):
            series_exp(expansion({-2: 1}, 4))

    def test_exp_with_log_multiple(self):
        """exp(2 ln x + 1/x) = x^2 exp(1/x): compare coefficient shifts."""
        inner = AsymptoticExpansion(F(2), ((1, F(1)),), 5)
        outer = series_exp(inner)
        plain = series_exp(expansion({1: 1}, 5))
        assert outer.order == plain.order - 2
        for k in range(-2, outer.order + 1):
            assert outer.coeff(k) == plain.coeff(k + 2)

    def test_exp_rejects_fractional_log_coefficient(self):
        inner = AsymptoticExpansion(F(1, 2), ((1, F(1)),), 5)
        with pytest.raises(UnsupportedOperationError):
            series_exp(inner)

    def test_derivative_shifts_and_scales(self):
        u = expansion({-1: F(3), 2: F(5)}, 4)
        d = series_derivative(u)
        assert d.coeff(0) == 3  # d/dx 3x
        assert d.coeff(3) == -10  # d/dx 5x^-2
