"""Positivity certificates for polynomials and log-rational expressions.

The core device: to certify that an expression ``e(x)`` is negative on a ray
``(s, infinity)``, show that its derivative is positive there (so ``e`` is
increasing) and that ``e`` tends to 0 at infinity.  Increasing towards a
zero limit forces negativity everywhere on the ray.

Derivative positivity reduces to polynomial positivity, certified by the
crudest sufficient test that never lies: after the substitution
``x -> x + s``, all coefficients are nonnegative and at least one is
positive.  The test is incomplete — a positive polynomial can fail it — so
its other answer is "inconclusive", never "negative".
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .elementary import iv_ln
from .interval import DomainError, Interval

__all__ = [
    "CertificateReport",
    "CertificateStep",
    "LimitClass",
    "LogRationalExpr",
    "Polynomial",
    "PositivityVerdict",
    "RationalFunction",
    "certify_negative_on_ray",
    "logexpr_derivative",
    "logexpr_limit_at_infinity",
    "poly_taylor_shift",
    "positivity_on_ray",
    "rational_from_expansion",
]


@dataclass(frozen=True)
class Polynomial:
    """Ascending coefficient tuple; trailing zeros trimmed; () is the zero polynomial."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        cleaned = tuple(Fraction(c) for c in self.coeffs)
        while cleaned and cleaned[-1] == 0:
            cleaned = cleaned[:-1]
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Fraction | int]) -> "Polynomial":
        return cls(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def constant(cls, value: Fraction | int) -> "Polynomial":
        return cls((Fraction(value),))

    @classmethod
    def x_power(cls, n: int, scale: Fraction | int = 1) -> "Polynomial":
        return cls((Fraction(0),) * n + (Fraction(scale),))

    # -- structure ----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, point: Fraction | int) -> Fraction:
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * point + c
        return result

    def eval_interval(self, iv: Interval) -> Interval:
        result = Interval.point(0)
        for c in reversed(self.coeffs):
            result = result * iv + c
        return result

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial(tuple(c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        if isinstance(other, (Fraction, int)):
            return Polynomial(tuple(c * other for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return Polynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        quotient = [Fraction(0)] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        rem = list(self.coeffs)
        d, lead = other.degree, other.leading
        while len(rem) - 1 >= d and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            factor = rem[-1] / lead
            quotient[k] = factor
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= factor * c
        return Polynomial(tuple(quotient)), Polynomial(tuple(rem))

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def monic(self) -> "Polynomial":
        return self if self.is_zero else self * (1 / self.leading)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "- " if c < 0 else ("+ " if parts else "")
            mag = abs(c)
            var = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            body = f"{mag}" if not var else (var if mag == 1 else f"{mag}*{var}")
            parts.append(f"{sign}{body}")
        return " ".join(parts)


def _poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero:
        a, b = b, divmod(a, b)[1]
    return a.monic() if not a.is_zero else a


def poly_taylor_shift(p: Polynomial, s: Fraction | int) -> Polynomial:
    """The polynomial ``q(x) = p(x + s)``, computed by Horner in ``x + s``."""
    s = Fraction(s)
    shifted_x = Polynomial((s, Fraction(1)))
    result = Polynomial(())
    for c in reversed(p.coeffs):
        result = result * shifted_x + Polynomial.constant(c)
    return result


class PositivityVerdict(enum.Enum):
    CERTIFIED_POSITIVE = "certified_positive"
    INCONCLUSIVE = "inconclusive"


def positivity_on_ray(p: Polynomial, s: Fraction | int) -> PositivityVerdict:
    """Sufficient test for ``p > 0`` on ``(s, infinity)``.

    After shifting, every monomial of a coefficient-nonnegative polynomial
    is nonnegative for positive arguments, and a single positive
    coefficient makes the sum strictly positive there.
    """
    shifted = poly_taylor_shift(p, s)
    if shifted.is_zero:
        return PositivityVerdict.INCONCLUSIVE
    if all(c >= 0 for c in shifted.coeffs):
        return PositivityVerdict.CERTIFIED_POSITIVE
    return PositivityVerdict.INCONCLUSIVE


@dataclass(frozen=True)
class RationalFunction:
    """Quotient of polynomials in canonical form: coprime, monic denominator."""

    num: Polynomial
    den: Polynomial

    def __post_init__(self) -> None:
        if self.den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        num, den = self.num, self.den
        g = _poly_gcd(num, den)
        if not g.is_zero and g.degree > 0:
            num = divmod(num, g)[0]
            den = divmod(den, g)[0]
        lead = den.leading
        if lead != 1:
            num = num * (1 / lead)
            den = den * (1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_poly(cls, p: Polynomial) -> "RationalFunction":
        return cls(p, Polynomial.constant(1))

    @classmethod
    def constant(cls, value: Fraction | int) -> "RationalFunction":
        return cls.from_poly(Polynomial.constant(value))

    @classmethod
    def x(cls) -> "RationalFunction":
        return cls.from_poly(Polynomial.x_power(1))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __call__(self, point: Fraction | int) -> Fraction:
        d = self.den(point)
        if d == 0:
            raise DomainError(f"pole at {point}")
        return self.num(point) / d

    def eval_interval(self, iv: Interval) -> Interval:
        return self.num.eval_interval(iv) / self.den.eval_interval(iv)

    def __add__(self, other: "RationalFunction | Fraction | int") -> "RationalFunction":
        o = _as_rf(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other: "RationalFunction | Fraction | int") -> "RationalFunction":
        return self + (-_as_rf(other))

    def __rsub__(self, other: "RationalFunction | Fraction | int") -> "RationalFunction":
        return _as_rf(other) + (-self)

    def __mul__(self, other: "RationalFunction | Fraction | int") -> "RationalFunction":
        o = _as_rf(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "RationalFunction | Fraction | int") -> "RationalFunction":
        o = _as_rf(other)
        if o.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other: "RationalFunction | Fraction | int") -> "RationalFunction":
        return _as_rf(other) / self

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def limit_at_infinity(self) -> "Fraction | None":
        """The finite limit as x -> infinity, or None when it diverges."""
        if self.is_zero or self.num.degree < self.den.degree:
            return Fraction(0)
        if self.num.degree == self.den.degree:
            return self.num.leading / self.den.leading
        return None

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"


def _as_rf(value: "RationalFunction | Fraction | int") -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction.constant(value)


def rational_from_expansion(e) -> RationalFunction:
    """Convert a log-free truncated expansion into the rational function it denotes.

    ``sum a_k x^-k`` over indices ``-d <= k <= K`` becomes
    ``(sum a_k x^(K-k)) / x^K``.
    """
    if e.log_coeff != 0:
        raise ValueError("expansion with a logarithmic term is not a rational function")
    top = max((k for k, _ in e.coeffs), default=0)
    top = max(top, 0)
    num = [Fraction(0)] * (top + e.low_degree + 1)
    for k, c in e.coeffs:
        num[top - k] = c
    return RationalFunction(Polynomial(tuple(num)), Polynomial.x_power(top))


# ---------------------------------------------------------------------------
# log-rational expressions
# ---------------------------------------------------------------------------


class LimitClass(enum.Enum):
    ZERO = "zero"
    FINITE_NONZERO = "finite_nonzero"
    DIVERGES = "diverges"


@dataclass(frozen=True)
class LogRationalExpr:
    """``sum c_i ln(r_i(x)) + q(x)`` with rational ``c_i`` and rational functions."""

    log_terms: tuple[tuple[Fraction, RationalFunction], ...]
    rational_part: RationalFunction

    def evaluate(self, x: Fraction | int, work_precision: int = 64) -> Interval:
        """Certified enclosure of the expression at an exact rational point."""
        total = Interval.point(self.rational_part(Fraction(x)))
        for c, arg in self.log_terms:
            value = arg(Fraction(x))
            if value <= 0:
                raise DomainError(f"logarithm argument {value} <= 0 at x={x}")
            total = total + c * iv_ln(value, work_precision)
        return total


def logexpr_derivative(e: LogRationalExpr) -> RationalFunction:
    """Exact derivative: ``sum c_i r_i'/r_i + q'``, in canonical form."""
    total = e.rational_part.derivative()
    for c, arg in e.log_terms:
        total = total + c * (arg.derivative() / arg)
    return total


def logexpr_limit_at_infinity(e: LogRationalExpr) -> LimitClass:
    """Classify the limit of the expression as x -> infinity, conservatively.

    The log part is folded into ``ln`` of one rational function with integer
    exponents; its limit is zero exactly when that function's numerator and
    denominator share degree and leading coefficient.  Any case that is not
    a certified finite limit — including one the classifier merely cannot
    decide, such as a finite transcendental log limit — reports DIVERGES.
    """
    if e.log_terms:
        scale = math.lcm(*(c.denominator for c, _ in e.log_terms))
        folded = RationalFunction.constant(1)
        for c, arg in e.log_terms:
            k = int(c * scale)
            if k != 0:
                folded = folded * _rf_int_pow(arg, k)
        if folded.num.is_zero or folded.num.degree != folded.den.degree:
            return LimitClass.DIVERGES
        if folded.num.leading != folded.den.leading:
            # ln of a finite limit != 1: nonzero, possibly transcendental.
            return LimitClass.DIVERGES
    rational_limit = e.rational_part.limit_at_infinity()
    if rational_limit is None:
        return LimitClass.DIVERGES
    return LimitClass.ZERO if rational_limit == 0 else LimitClass.FINITE_NONZERO


def _rf_int_pow(rf: RationalFunction, k: int) -> RationalFunction:
    if k < 0:
        return _rf_int_pow(1 / rf, -k)
    result = RationalFunction.constant(1)
    for _ in range(k):
        result = result * rf
    return result


@dataclass(frozen=True)
class CertificateStep:
    """One verified condition in a negativity certificate, with its evidence."""

    label: str
    verdict: str
    detail: str


@dataclass(frozen=True)
class CertificateReport:
    certified: bool
    threshold: Fraction
    steps: tuple[CertificateStep, ...]

    def failures(self) -> list[CertificateStep]:
        return [s for s in self.steps if s.verdict != "ok"]


def _signs(p: Polynomial) -> str:
    if p.is_zero:
        return "zero polynomial"
    return "coefficients " + ",".join(
        ("+" if c > 0 else "-" if c < 0 else "0") for c in p.coeffs
    )


def _positivity_step(label: str, p: Polynomial, s: Fraction) -> CertificateStep:
    verdict = positivity_on_ray(p, s)
    shifted = poly_taylor_shift(p, s)
    ok = verdict is PositivityVerdict.CERTIFIED_POSITIVE
    return CertificateStep(
        label,
        "ok" if ok else "inconclusive",
        f"after x -> x+{s}: {_signs(shifted)}",
    )


def certify_negative_on_ray(e: LogRationalExpr, s: Fraction | int) -> CertificateReport:
    """Attempt to certify ``e(x) < 0`` for all ``x > s``.

    Succeeds when (a) every logarithm argument is certified positive on the
    ray, so the expression is defined there, (b) the derivative is certified
    positive on the ray, and (c) the limit at infinity is exactly zero.
    An increasing function with limit zero is negative on the whole ray.
    Failure of any sub-certificate yields ``certified=False`` (the method is
    sufficient, not complete: no conclusion about the inequality follows).
    """
    s = Fraction(s)
    steps: list[CertificateStep] = []
    for i, (c, arg) in enumerate(e.log_terms):
        steps.append(_positivity_step(f"log argument {i} numerator positive", arg.num, s))
        steps.append(_positivity_step(f"log argument {i} denominator positive", arg.den, s))
    steps.append(
        _positivity_step("rational part denominator positive", e.rational_part.den, s)
    )
    derivative = logexpr_derivative(e)
    steps.append(_positivity_step("derivative numerator positive", derivative.num, s))
    steps.append(_positivity_step("derivative denominator positive", derivative.den, s))
    limit = logexpr_limit_at_infinity(e)
    steps.append(
        CertificateStep(
            "limit at infinity is zero",
            "ok" if limit is LimitClass.ZERO else "inconclusive",
            f"classified {limit.value}",
        )
    )
    certified = all(step.verdict == "ok" for step in steps)
    return CertificateReport(certified, s, tuple(steps))
