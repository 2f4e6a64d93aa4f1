"""Exact algebra of truncated asymptotic expansions in descending powers.

An expansion represents ``c * ln(x) + sum_k a_k * x**(-k)`` with exact
rational coefficients, truncated at a known order ``K``: coefficients of
``x**(-k)`` for ``k > K`` are unknown, not zero.  Negative indices ``k``
carry nonnegative powers of ``x``, so polynomially growing prefactors fit
in the same container.  Every operation tracks how far the result's
coefficients remain fully determined and truncates there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

__all__ = [
    "AsymptoticExpansion",
    "UnsupportedOperationError",
    "bernoulli",
    "digamma_expansion",
    "expansion",
    "format_expansion",
    "reciprocal_shift_expansion",
    "series_add",
    "series_derivative",
    "series_exp",
    "series_mul",
    "series_scale",
    "series_sub",
    "theta_expansion",
    "trigamma_expansion",
    "trigamma_exp_digamma_expansion",
]


class UnsupportedOperationError(ValueError):
    """The requested series operation is not defined for these operands."""


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """The n-th Bernoulli number, with B(1) = -1/2.

    Computed from the defining recurrence
    ``sum_{j=0}^{n} C(n+1, j) B_j = 0`` for ``n >= 1``.
    """
    if n < 0:
        raise ValueError("Bernoulli numbers are indexed by nonnegative integers")
    if n == 0:
        return Fraction(1)
    if n > 1 and n % 2 == 1:
        return Fraction(0)
    acc = sum(
        (Fraction(math.comb(n + 1, j)) * bernoulli(j) for j in range(n)),
        start=Fraction(0),
    )
    return -acc / (n + 1)


@dataclass(frozen=True)
class AsymptoticExpansion:
    """``log_coeff * ln(x) + sum a_k x**(-k)``, coefficients exact through order."""

    log_coeff: Fraction
    coeffs: tuple[tuple[int, Fraction], ...]
    order: int
    low_degree: int = field(init=False)

    def __post_init__(self) -> None:
        keys = [k for k, _ in self.coeffs]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise ValueError("coefficient indices must be strictly increasing")
        if any(c == 0 for _, c in self.coeffs):
            raise ValueError("zero coefficients must be omitted")
        if keys and keys[-1] > self.order:
            raise ValueError(
                f"coefficient index {keys[-1]} exceeds truncation order {self.order}"
            )
        object.__setattr__(self, "low_degree", max(0, -keys[0]) if keys else 0)

    def coeff(self, k: int) -> Fraction:
        """Coefficient of ``x**(-k)``; raises beyond the truncation order."""
        if k > self.order:
            raise ValueError(
                f"coefficient of x^-{k} is not determined at truncation order {self.order}"
            )
        return dict(self.coeffs).get(k, Fraction(0))

    def coeff_map(self) -> dict[int, Fraction]:
        return dict(self.coeffs)

    def __str__(self) -> str:
        return format_expansion(self)


def expansion(
    coeffs: Mapping[int, Fraction | int] | Iterable[tuple[int, Fraction | int]],
    order: int,
    log_coeff: Fraction | int = 0,
) -> AsymptoticExpansion:
    """Build an expansion from any coefficient mapping, dropping zeros."""
    items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
    cleaned = sorted((k, Fraction(c)) for k, c in items if c != 0)
    return AsymptoticExpansion(Fraction(log_coeff), tuple(cleaned), order)


def _min_key(e: AsymptoticExpansion) -> int:
    return e.coeffs[0][0] if e.coeffs else e.order + 1


def series_add(u: AsymptoticExpansion, v: AsymptoticExpansion) -> AsymptoticExpansion:
    order = min(u.order, v.order)
    merged: dict[int, Fraction] = {}
    for k, c in (*u.coeffs, *v.coeffs):
        if k <= order:
            merged[k] = merged.get(k, Fraction(0)) + c
    return expansion(merged, order, u.log_coeff + v.log_coeff)


def series_scale(u: AsymptoticExpansion, scalar: Fraction | int) -> AsymptoticExpansion:
    s = Fraction(scalar)
    return expansion({k: s * c for k, c in u.coeffs}, u.order, s * u.log_coeff)


def series_sub(u: AsymptoticExpansion, v: AsymptoticExpansion) -> AsymptoticExpansion:
    return series_add(u, series_scale(v, -1))


def series_mul(u: AsymptoticExpansion, v: AsymptoticExpansion) -> AsymptoticExpansion:
    """Cauchy product; operands must be log-free.

    The product coefficient at index ``n`` needs every ``u`` index up to
    ``n - min_key(v)`` and vice versa, which caps the sound result order at
    ``min(order(u) + min_key(v), order(v) + min_key(u))``.
    """
    if u.log_coeff != 0 or v.log_coeff != 0:
        raise UnsupportedOperationError(
            "product of expansions with logarithmic terms is not representable"
        )
    order = min(u.order + _min_key(v), v.order + _min_key(u))
    out: dict[int, Fraction] = {}
    for i, a in u.coeffs:
        for j, b in v.coeffs:
            if i + j <= order:
                out[i + j] = out.get(i + j, Fraction(0)) + a * b
    return expansion(out, order)


def series_exp(f: AsymptoticExpansion) -> AsymptoticExpansion:
    """Exponential of an expansion, ``exp(c ln x + sum a_k x^-k) = x^c * exp(...)``.

    Requires a vanishing constant term, no growing powers, and a nonnegative
    integer logarithmic coefficient ``c`` (which turns into a shift of the
    result's indices by ``-c``).  Coefficients follow the recurrence
    ``k b_k = sum_{j=1}^{k} j a_j b_{k-j}`` with ``b_0 = 1``.
    """
    if f.log_coeff.denominator != 1 or f.log_coeff < 0:
        raise UnsupportedOperationError(
            "exp of an expansion requires a nonnegative integer ln coefficient, "
            f"got {f.log_coeff}"
        )
    if f.low_degree > 0:
        raise UnsupportedOperationError("exp of a growing expansion is not representable")
    coeffs = f.coeff_map()
    if coeffs.get(0, Fraction(0)) != 0:
        raise UnsupportedOperationError(
            "exp requires a vanishing constant term; scale it out first"
        )
    shift = int(f.log_coeff)
    k_max = f.order
    b = [Fraction(1)] + [Fraction(0)] * k_max
    for k in range(1, k_max + 1):
        b[k] = (
            sum(
                (j * coeffs.get(j, Fraction(0)) * b[k - j] for j in range(1, k + 1)),
                start=Fraction(0),
            )
            / k
        )
    return expansion({k - shift: b[k] for k in range(k_max + 1)}, k_max - shift)


def series_derivative(u: AsymptoticExpansion) -> AsymptoticExpansion:
    """Termwise derivative: ``d/dx [c ln x + sum a_k x^-k]``."""
    out: dict[int, Fraction] = {}
    if u.log_coeff != 0:
        out[1] = u.log_coeff
    for k, c in u.coeffs:
        if k != 0:
            out[k + 1] = out.get(k + 1, Fraction(0)) - k * c
    return expansion(out, u.order + 1)


def reciprocal_shift_expansion(a: Fraction | int, order: int) -> AsymptoticExpansion:
    """Expansion of ``1 / (x + a)`` as ``sum_{k>=1} (-a)**(k-1) x**(-k)``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    a = Fraction(a)
    coeffs: dict[int, Fraction] = {}
    power = Fraction(1)
    for k in range(1, order + 1):
        coeffs[k] = power
        power *= -a
    return expansion(coeffs, order)


def digamma_expansion(order: int) -> AsymptoticExpansion:
    """Expansion of psi(x+1): ``ln x + 1/(2x) - sum B_k / (k x^k)``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    coeffs: dict[int, Fraction] = {1: Fraction(1, 2)}
    for k in range(2, order + 1, 2):
        coeffs[k] = -bernoulli(k) / k
    return expansion(coeffs, order, log_coeff=1)


def trigamma_expansion(order: int) -> AsymptoticExpansion:
    """Expansion of psi'(x+1): ``sum_{k>=1} B_{k-1} x**(-k)``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    return expansion({k: bernoulli(k - 1) for k in range(1, order + 1)}, order)


def theta_expansion(m: Fraction | int, order: int) -> AsymptoticExpansion:
    """Expansion of ``(exp(m/(x+1)) - exp(-m/x)) / (2m)``."""
    m = Fraction(m)
    if m == 0:
        raise ValueError("the parameter must be nonzero")
    grow = series_exp(series_scale(reciprocal_shift_expansion(1, order), m))
    decay = series_exp(expansion({1: -m}, order))
    return series_scale(series_sub(grow, decay), Fraction(1, 2) / m)


def trigamma_exp_digamma_expansion(order: int) -> AsymptoticExpansion:
    """Expansion of ``psi'(x+1) * exp(2 psi(x+1))``, sound through ``order``.

    The factors are expanded two indices deeper so that the Cauchy product
    is fully determined through the requested order: the exponential factor
    grows like ``x**2``, which shifts its lowest index to ``-2``.
    """
    if order < -1:
        raise ValueError("order must be at least -1")
    depth = order + 2
    trig = trigamma_expansion(depth)
    growth = series_exp(series_scale(digamma_expansion(depth), 2))
    product = series_mul(trig, growth)
    if product.order < order:
        raise AssertionError("product order bookkeeping is inconsistent")
    return expansion(
        {k: c for k, c in product.coeffs if k <= order}, order, product.log_coeff
    )


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _term_str(k: int, c: Fraction) -> str:
    mag = -c if c < 0 else c
    if k == 0:
        body = str(mag)
    else:
        power = "x" if abs(k) == 1 else f"x^{abs(k)}"
        if k > 0:
            body = f"{mag.numerator}/({mag.denominator}{power})" if mag.denominator != 1 else f"{mag}/{power}"
        else:
            body = f"{mag}{power}" if mag != 1 else power
    return ("- " if c < 0 else "+ ") + body


def format_expansion(e: AsymptoticExpansion) -> str:
    """Human-readable rendering, e.g. ``ln(x) + 1/(2x) - 1/(12x^2) + O(x^-3)``."""
    parts: list[str] = []
    if e.log_coeff != 0:
        prefix = "" if e.log_coeff == 1 else f"{e.log_coeff} "
        parts.append(f"{prefix}ln(x)")
    for k, c in sorted(e.coeffs):
        parts.append(_term_str(k, c))
    rendered = " ".join(parts) if parts else "0"
    if rendered.startswith("+ "):
        rendered = rendered[2:]
    return f"{rendered} + O(x^-{e.order + 1})"
