"""Digamma/trigamma enclosures, classical constants, recurrence invariants."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from psicert import (
    Interval,
    batir_bstar_enclosure,
    digamma_enclosure,
    digamma_zero,
    euler_gamma_enclosure,
    trigamma_enclosure,
)

from _oracles import (
    bstar_bracket,
    consistent,
    digamma_bracket,
    digamma_zero_bracket,
    euler_gamma_bracket,
    trigamma_bracket,
    zeta2_bracket,
)

F = Fraction

POINTS = [F(1, 10), F(1, 2), F(1), F(3, 2), F(2), F(29, 7), F(10), F(1000)]


class TestDigamma:
    @pytest.mark.parametrize("x", POINTS, ids=str)
    def test_against_oracle(self, x):
        enclosure = digamma_enclosure(x)
        assert consistent(enclosure, digamma_bracket(x))
        assert enclosure.hi - enclosure.lo <= F(1, 10**6)

    def test_negative_of_gamma_at_one(self):
        enclosure = digamma_enclosure(F(1))
        lo, hi = euler_gamma_bracket()
        assert consistent(enclosure, (-hi, -lo))

    def test_domain_validation(self):
        for bad in (F(0), F(-3, 2)):
            with pytest.raises(ValueError):
                digamma_enclosure(bad)

    def test_shift_target_tightens(self):
        x = F(3, 2)
        wide = digamma_enclosure(x, shift_target=5)
        tight = digamma_enclosure(x, shift_target=40)
        assert tight.hi - tight.lo <= wide.hi - wide.lo
        assert consistent(tight, digamma_bracket(x))

    @given(st.fractions(min_value=F(1, 20), max_value=30, max_denominator=20))
    def test_recurrence(self, x):
        """psi(x+1) and psi(x) + 1/x both contain the same real number."""
        lhs = digamma_enclosure(x + 1)
        rhs = digamma_enclosure(x) + Interval(1 / x, 1 / x)
        assert lhs.intersects(rhs)

    def test_monotone_increasing_sample(self):
        assert digamma_enclosure(F(2)).strictly_less(digamma_enclosure(F(3)))


class TestTrigamma:
    @pytest.mark.parametrize("x", POINTS, ids=str)
    def test_against_oracle(self, x):
        enclosure = trigamma_enclosure(x)
        assert consistent(enclosure, trigamma_bracket(x))

    def test_zeta_two_at_one(self):
        """psi'(1) = pi^2/6, cross-checked against the pure-rational bracket."""
        enclosure = trigamma_enclosure(F(1))
        assert consistent(enclosure, zeta2_bracket())
        assert enclosure.hi - enclosure.lo <= F(1, 10**9)

    def test_domain_validation(self):
        with pytest.raises(ValueError):
            trigamma_enclosure(F(-1))

    @given(st.fractions(min_value=F(1, 20), max_value=30, max_denominator=20))
    def test_recurrence(self, x):
        """psi'(x+1) and psi'(x) - 1/x^2 both contain the same real number."""
        lhs = trigamma_enclosure(x + 1)
        step = 1 / x**2
        rhs = trigamma_enclosure(x) - Interval(step, step)
        assert lhs.intersects(rhs)

    def test_positive_and_decreasing_sample(self):
        a, b = trigamma_enclosure(F(3)), trigamma_enclosure(F(4))
        assert a.strictly_positive()
        assert b.strictly_less(a)


class TestConstants:
    def test_euler_gamma(self):
        enclosure = euler_gamma_enclosure()
        assert consistent(enclosure, euler_gamma_bracket())
        assert enclosure.hi - enclosure.lo <= F(1, 10**6)

    def test_bstar_value_and_location(self):
        enclosure = batir_bstar_enclosure()
        assert consistent(enclosure, bstar_bracket())
        assert enclosure.lo > F(1, 2)
        assert enclosure.hi - enclosure.lo <= F(1, 10**6)

    def test_bstar_tightens_with_shift_target(self):
        wide = batir_bstar_enclosure(10)
        tight = batir_bstar_enclosure(40)
        assert tight.hi - tight.lo <= wide.hi - wide.lo

    def test_digamma_zero(self):
        tolerance = F(1, 10**7)
        enclosure = digamma_zero(tolerance)
        assert enclosure.hi - enclosure.lo <= tolerance
        assert consistent(enclosure, digamma_zero_bracket())

    def test_digamma_changes_sign_across_zero(self):
        enclosure = digamma_zero(F(1, 10**5))
        below = digamma_enclosure(enclosure.lo - F(1, 100))
        above = digamma_enclosure(enclosure.hi + F(1, 100))
        assert below.strictly_negative()
        assert above.strictly_positive()

    def test_digamma_zero_bad_tolerance(self):
        with pytest.raises(ValueError):
            digamma_zero(F(0))
