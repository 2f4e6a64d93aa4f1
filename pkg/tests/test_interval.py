"""Exact interval arithmetic: field operations, soundness, outward rounding."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from psicert import (
    DomainError,
    Interval,
    ROUNDING_GUARD_BITS,
    iv_arith,
    parse_rational,
    round_outward,
)

F = Fraction


def iv(lo, hi=None) -> Interval:
    return Interval(F(lo), F(hi if hi is not None else lo))


class TestConstruction:
    def test_point_interval(self):
        a = iv("1/3")
        assert a.lo == a.hi == F(1, 3)

    def test_reversed_endpoints_rejected(self):
        with pytest.raises(ValueError):
            Interval(F(2), F(1))

    def test_immutability(self):
        a = iv(1, 2)
        with pytest.raises(AttributeError):
            a.lo = F(0)


class TestFieldOps:
    def test_exact_addition(self):
        assert iv_arith("add", iv("1/3"), iv("1/6")) == iv("1/2")

    def test_subtraction_widens(self):
        a = iv_arith("sub", iv(1, 2), iv(0, 1))
        assert (a.lo, a.hi) == (F(0), F(2))

    @pytest.mark.parametrize(
        "a, b, expected",
        [
            (iv(2, 3), iv(4, 5), iv(8, 15)),
            (iv(-3, -2), iv(4, 5), iv(-15, -8)),
            (iv(-2, 3), iv(-5, 4), iv(-15, 12)),
            (iv(-1, 1), iv(-1, 1), iv(-1, 1)),
        ],
    )
    def test_multiplication_sign_cases(self, a, b, expected):
        assert iv_arith("mul", a, b) == expected

    def test_division_exact(self):
        assert iv_arith("div", iv(1, 2), iv(4)) == iv("1/4", "1/2")

    def test_division_by_zero_straddling_interval(self):
        with pytest.raises(DomainError):
            iv_arith("div", iv(1), iv(-1, 1))

    def test_integer_powers(self):
        assert iv_arith("pow_int", iv(-2, 3), 2) == iv(0, 9)
        assert iv_arith("pow_int", iv(-2, 3), 3) == iv(-8, 27)
        assert iv_arith("pow_int", iv(2, 4), -1) == iv("1/4", "1/2")

    def test_negative_power_through_zero_rejected(self):
        with pytest.raises(DomainError):
            iv_arith("pow_int", iv(-1, 1), -2)

    def test_operator_sugar_matches_dispatch(self):
        a, b = iv(1, 2), iv("1/3", "1/2")
        assert a + b == iv_arith("add", a, b)
        assert a - b == iv_arith("sub", a, b)
        assert a * b == iv_arith("mul", a, b)
        assert a / b == iv_arith("div", a, b)


rationals = st.fractions(
    min_value=-50, max_value=50, max_denominator=40
)


@st.composite
def intervals(draw):
    a = draw(rationals)
    b = draw(rationals)
    return Interval(min(a, b), max(a, b))


@given(intervals(), intervals(), st.sampled_from(["add", "sub", "mul"]))
def test_arithmetic_soundness(a, b, op):
    """Member points map into the result interval for every endpoint mix."""
    result = iv_arith(op, a, b)
    for pa in (a.lo, (a.lo + a.hi) / 2, a.hi):
        for pb in (b.lo, (b.lo + b.hi) / 2, b.hi):
            point = {
                "add": pa + pb,
                "sub": pa - pb,
                "mul": pa * pb,
            }[op]
            assert result.lo <= point <= result.hi


@given(intervals(), intervals())
def test_division_soundness(a, b):
    if b.lo <= 0 <= b.hi:
        with pytest.raises(DomainError):
            iv_arith("div", a, b)
        return
    result = iv_arith("div", a, b)
    for pa in (a.lo, a.hi):
        for pb in (b.lo, b.hi):
            assert result.lo <= pa / pb <= result.hi


@given(intervals(), st.integers(min_value=0, max_value=6))
def test_power_soundness(a, n):
    result = iv_arith("pow_int", a, n)
    for point in (a.lo, (a.lo + a.hi) / 2, a.hi):
        assert result.lo <= point**n <= result.hi


class TestPredicates:
    def test_strict_order(self):
        assert iv(1, 2).strictly_less(iv(3, 4))
        assert not iv(1, 3).strictly_less(iv(3, 4))
        assert iv(3, 4).strictly_greater(iv(1, 2))

    def test_signs(self):
        assert iv(1, 2).strictly_positive()
        assert iv(-2, -1).strictly_negative()
        assert not iv(0, 1).strictly_positive()

    def test_encloses_and_intersects(self):
        assert iv(0, 10).encloses(iv(1, 2))
        assert not iv(0, 10).encloses(iv(5, 11))
        assert iv(0, 2).intersects(iv(2, 3))
        assert not iv(0, 1).intersects(iv(2, 3))

    def test_hull(self):
        assert iv(0, 1).hull(iv(5, 6)) == iv(0, 6)


class TestOutwardRounding:
    def test_result_contains_input(self):
        a = iv("1/3", "2/3")
        rounded = round_outward(a, 16)
        assert rounded.encloses(a)

    def test_endpoints_land_on_dyadic_grid(self):
        rounded = round_outward(iv("1/3", "2/3"), 16)
        step = F(1, 2 ** (16 + ROUNDING_GUARD_BITS))
        assert (rounded.lo / step).denominator == 1
        assert (rounded.hi / step).denominator == 1

    def test_width_penalty_is_bounded(self):
        a = iv("1/7", "1/7")
        rounded = round_outward(a, 24)
        assert rounded.hi - rounded.lo <= 2 * F(1, 2 ** (24 + ROUNDING_GUARD_BITS))

    @given(intervals(), st.integers(min_value=4, max_value=80))
    def test_nested_precisions(self, a, precision):
        coarse = round_outward(a, precision)
        fine = round_outward(a, precision + 13)
        assert coarse.encloses(a)
        assert fine.encloses(a)
        # the coarse grid is a subset of the fine grid, so coarse is no tighter
        assert coarse.encloses(fine)


class TestParseRational:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("3", F(3)),
            ("-7/2", F(-7, 2)),
            ("0.125", F(1, 8)),
            ("  2/3 ", F(2, 3)),
            ("1e-3", F(1, 1000)),
        ],
    )
    def test_accepts(self, text, expected):
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("text", ["", "abc", "1/0", "2//3"])
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)
