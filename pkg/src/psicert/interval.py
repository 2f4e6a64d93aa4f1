"""Exact interval arithmetic over the rationals.

Every quantity in this package that cannot be represented exactly is carried
as a closed interval with rational endpoints.  All operations are *outward*:
a result interval always contains the true image of its inputs, so a strict
comparison between two disjoint intervals is a proof about the underlying
real numbers.  Field operations on intervals are themselves exact; rounding
only ever happens through :func:`round_outward`, which may widen but never
shrink an interval.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "DomainError",
    "Interval",
    "ROUNDING_GUARD_BITS",
    "Rational",
    "iv_arith",
    "parse_rational",
    "round_outward",
]

#: The universal exact scalar.  An alias so call sites read as the concept,
#: not the stdlib module that happens to implement it.
Rational = Fraction

#: Extra bits of head-room used by :func:`round_outward` beyond the requested
#: precision, so rounding never dominates the error budget of the routine
#: that produced the interval.
ROUNDING_GUARD_BITS = 32


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, integer, or decimal notation into an exact rational.

    Decimal literals are converted exactly (``"0.1"`` becomes ``1/10``), so
    no rounding can sneak in at the boundary of the system.
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def _as_fraction(value: Fraction | int | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class Interval:
    """A closed interval ``[lo, hi]`` with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", _as_fraction(self.lo))
        object.__setattr__(self, "hi", _as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")

    @classmethod
    def point(cls, value: Fraction | int | str) -> "Interval":
        q = _as_fraction(value)
        return cls(q, q)

    # -- inspection ---------------------------------------------------------

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, value: object) -> bool:
        q = _as_fraction(value)  # type: ignore[arg-type]
        return self.lo <= q <= self.hi

    def encloses(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    # -- certified order predicates ------------------------------------------

    def strictly_less(self, other: "Interval") -> bool:
        """True only if every point of ``self`` is below every point of ``other``."""
        return self.hi < other.lo

    def strictly_greater(self, other: "Interval") -> bool:
        return self.lo > other.hi

    def strictly_positive(self) -> bool:
        return self.lo > 0

    def strictly_negative(self) -> bool:
        return self.hi < 0

    # -- exact field arithmetic ----------------------------------------------

    def __add__(self, other: "Interval | Fraction | int") -> "Interval":
        o = _coerce(other)
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other: "Interval | Fraction | int") -> "Interval":
        return self + (-_coerce(other))

    def __rsub__(self, other: "Interval | Fraction | int") -> "Interval":
        return _coerce(other) + (-self)

    def __mul__(self, other: "Interval | Fraction | int") -> "Interval":
        o = _coerce(other)
        products = (
            self.lo * o.lo,
            self.lo * o.hi,
            self.hi * o.lo,
            self.hi * o.hi,
        )
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def __truediv__(self, other: "Interval | Fraction | int") -> "Interval":
        o = _coerce(other)
        if o.lo <= 0 <= o.hi:
            raise DomainError(f"division by an interval containing zero: {o}")
        return self * Interval(1 / o.hi, 1 / o.lo)

    def __rtruediv__(self, other: "Interval | Fraction | int") -> "Interval":
        return _coerce(other) / self

    def __pow__(self, exponent: int) -> "Interval":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (Interval.point(1) / self) ** (-exponent)
        if exponent == 0:
            return Interval.point(1)
        a, b = self.lo**exponent, self.hi**exponent
        if exponent % 2 == 1 or self.lo >= 0:
            return Interval(a, b)
        if self.hi <= 0:
            return Interval(b, a)
        # even power of an interval straddling zero
        return Interval(Fraction(0), max(a, b))

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def _coerce(value: "Interval | Fraction | int | str") -> Interval:
    if isinstance(value, Interval):
        return value
    return Interval.point(_as_fraction(value))


def iv_arith(
    op: str,
    a: Interval,
    b: "Interval | Fraction | int | None" = None,
) -> Interval:
    """Dispatch one primitive interval operation by name.

    ``op`` is one of ``add``, ``sub``, ``mul``, ``div``, ``neg``, ``pow_int``.
    ``neg`` is unary; ``pow_int`` takes an integer exponent for ``b``.
    """
    if op == "neg":
        if b is not None:
            raise ValueError("neg is a unary operation")
        return -a
    if b is None:
        raise ValueError(f"operation {op!r} needs a second operand")
    if op == "add":
        return a + _coerce(b)
    if op == "sub":
        return a - _coerce(b)
    if op == "mul":
        return a * _coerce(b)
    if op == "div":
        return a / _coerce(b)
    if op == "pow_int":
        if isinstance(b, Interval):
            raise ValueError("pow_int takes an integer exponent, not an interval")
        exponent = int(b)
        if Fraction(exponent) != _as_fraction(b):
            raise ValueError(f"pow_int exponent must be an integer, got {b!r}")
        return a**exponent
    raise ValueError(f"unknown interval operation {op!r}")


def round_outward(iv: Interval, precision: int) -> Interval:
    """Round endpoints outward onto the dyadic grid of step ``2^-(precision+guard)``.

    The result contains ``iv`` and its endpoints have denominators dividing
    ``2^(precision + ROUNDING_GUARD_BITS)``, which keeps endpoint bit-size
    bounded across long computations.  Grids for increasing precision are
    nested, so re-rounding at higher precision never loses containment.
    """
    if precision < 0:
        raise ValueError("precision must be nonnegative")
    shift = precision + ROUNDING_GUARD_BITS
    scale = 1 << shift
    lo = Fraction(math.floor(iv.lo * scale), scale)
    hi = Fraction(-math.floor(-iv.hi * scale), scale)
    return Interval(lo, hi)
