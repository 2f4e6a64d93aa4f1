"""Certified enclosures of elementary transcendental functions.

Each routine returns a rational :class:`~psicert.interval.Interval` that
provably contains the true real value.  Error control is explicit: every
truncated series is accompanied by a closed-form tail bound, added outward.

Internal working precision is quantized to multiples of 64 bits.  Together
with the nested rounding grids of :func:`~psicert.interval.round_outward`,
this makes enclosure width weakly decreasing in the requested precision,
which downstream refinement loops rely on.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .interval import DomainError, Interval, round_outward

__all__ = [
    "iv_exp",
    "iv_ln",
    "iv_pi",
    "iv_sinh",
    "ln2_enclosure",
]

_QUANTUM = 64


def _quantized(bits: int) -> int:
    """Smallest positive multiple of 64 that is >= ``bits``."""
    return max(1, -(-bits // _QUANTUM)) * _QUANTUM


def _pow2(bits: int) -> Fraction:
    return Fraction(1, 1 << bits) if bits >= 0 else Fraction(1 << -bits)


def _coerce(value: Interval | Fraction | int) -> Interval:
    if isinstance(value, Interval):
        return value
    return Interval.point(value)


def _snap(iv: Interval, bits: int) -> Interval:
    """Outward-round onto a dyadic grid to cap endpoint denominators.

    Series evaluation cost grows with the bit-size of the input's
    denominator; snapping first keeps that bounded without affecting
    soundness.  An endpoint is kept exact when snapping would move it
    across zero (the log domain check must see the caller's true sign).
    """
    snapped = round_outward(iv, bits)
    lo = iv.lo if (snapped.lo <= 0 < iv.lo) else snapped.lo
    hi = iv.hi if (snapped.hi >= 0 > iv.hi) else snapped.hi
    return Interval(lo, hi)


# ---------------------------------------------------------------------------
# exponential
# ---------------------------------------------------------------------------


def _exp_point(x: Fraction, precision: int) -> Interval:
    """Enclosure of e**x for one exact rational argument.

    Argument reduction: halve ``x`` until ``|t| <= 1/2``, sum the Taylor
    series with the geometric tail bound ``|t|^(N+1) / ((N+1)! (1-|t|))``,
    then square back up, rounding outward after every squaring.
    """
    ax = abs(x)
    j = 0
    t = x
    while abs(t) > Fraction(1, 2):
        t /= 2
        j += 1
    # Head-room: each squaring roughly doubles relative error (one bit), and
    # the final value has magnitude up to e**|x| (about 1.5 * ceil|x| bits).
    work = _quantized(precision + 2 * j + (3 * math.ceil(ax)) // 2 + 40)
    target = _pow2(work)

    at = abs(t)
    one_minus = 1 - at
    n = 0
    power = at  # |t|^(n+1)
    factorial = 1  # (n+1)!
    while power > target * factorial * one_minus:
        n += 1
        power *= at
        factorial *= n + 1
    tail = power / (factorial * one_minus)

    term = Fraction(1)
    total = Fraction(1)
    for k in range(1, n + 1):
        term = term * t / k
        total += term
    enclosure = round_outward(Interval(total - tail, total + tail), work)
    for _ in range(j):
        enclosure = round_outward(enclosure * enclosure, work)
    return round_outward(enclosure, precision)


def iv_exp(a: Interval | Fraction | int, work_precision: int) -> Interval:
    """Enclosure of the image of ``exp`` over ``a``.

    ``exp`` is increasing, so the image of an interval is the interval of
    the endpoint images.
    """
    iv = _coerce(a)
    # exp amplifies absolute perturbations by up to e**hi, so the input
    # snapping grid must be that much finer than the output precision.
    amplification = 2 * max(0, math.ceil(iv.hi))
    iv = _snap(iv, work_precision + 8 + amplification)
    lo = _exp_point(iv.lo, work_precision)
    hi = lo if iv.is_point else _exp_point(iv.hi, work_precision)
    return Interval(lo.lo, hi.hi)


# ---------------------------------------------------------------------------
# logarithm
# ---------------------------------------------------------------------------


def _atanh_small(u: Fraction, work: int) -> Interval:
    """Enclosure of atanh(u) for 0 <= u < 1/2 via the odd power series."""
    target = _pow2(work)
    u2 = u * u
    one_minus = 1 - u2
    total = Fraction(0)
    power = u  # u^(2n+1)
    n = 0
    while True:
        total += power / (2 * n + 1)
        n += 1
        power *= u2
        tail = power / ((2 * n + 1) * one_minus)
        if tail <= target:
            return Interval(total, total + tail)


@lru_cache(maxsize=None)
def _ln2_quantized(work: int) -> Interval:
    # ln 2 = 2 atanh(1/3); memoized per quantized working precision.
    return round_outward(_atanh_small(Fraction(1, 3), work + 4) * 2, work)


def ln2_enclosure(precision: int) -> Interval:
    """Enclosure of ln 2 with width at most 2**-precision."""
    return _ln2_quantized(_quantized(precision + 8))


def _ln_point(y: Fraction, work: int) -> Interval:
    if y <= 0:
        raise DomainError(f"logarithm of a nonpositive number: {y}")
    k = 0
    z = y
    while z >= 2:
        z /= 2
        k += 1
    while z < 1:
        z *= 2
        k -= 1
    # z in [1, 2): atanh argument (z-1)/(z+1) lies in [0, 1/3).
    u = (z - 1) / (z + 1)
    ln_z = _atanh_small(u, work + 2) * 2
    if k == 0:
        return ln_z
    return ln_z + k * _ln2_quantized(_quantized(work + max(k, -k).bit_length() + 2))


def iv_ln(a: Interval | Fraction | int, work_precision: int) -> Interval:
    """Enclosure of the image of ``ln`` over ``a``; requires ``a.lo > 0``."""
    iv = _coerce(a)
    if iv.lo <= 0:
        raise DomainError(f"logarithm requires a strictly positive interval, got {iv}")
    # ln amplifies absolute perturbations by 1/lo, so scale the snapping
    # grid with the number of doublings separating lo from 1.
    amplification = 0
    low = iv.lo
    while low < 1:
        low *= 2
        amplification += 2
    iv = _snap(iv, work_precision + 8 + amplification)
    work = _quantized(work_precision + 40)
    lo = _ln_point(iv.lo, work)
    hi = lo if iv.is_point else _ln_point(iv.hi, work)
    return round_outward(Interval(lo.lo, hi.hi), work_precision)


# ---------------------------------------------------------------------------
# hyperbolic sine and pi
# ---------------------------------------------------------------------------


def iv_sinh(a: Interval | Fraction | int, work_precision: int) -> Interval:
    """Enclosure of sinh over ``a`` as (exp(a) - exp(-a)) / 2."""
    iv = _coerce(a)
    grow = iv_exp(iv, work_precision + 2)
    decay = iv_exp(-iv, work_precision + 2)
    return (grow - decay) / 2


def _arctan_inverse(q: int, work: int) -> Interval:
    """Enclosure of arctan(1/q) for an integer q >= 2.

    The series alternates with strictly decreasing terms, so the partial
    sum and its successor bracket the limit.
    """
    target = _pow2(work)
    u = Fraction(1, q)
    u2 = u * u
    total = Fraction(0)
    power = u
    n = 0
    while True:
        term = power / (2 * n + 1)
        if term <= target:
            # Next term has sign (-1)^n: bracket accordingly.
            if n % 2 == 0:
                return Interval(total, total + term)
            return Interval(total - term, total)
        total += term if n % 2 == 0 else -term
        n += 1
        power *= u2


@lru_cache(maxsize=None)
def _pi_quantized(work: int) -> Interval:
    # Machin: pi = 16 arctan(1/5) - 4 arctan(1/239).
    enclosure = 16 * _arctan_inverse(5, work + 8) - 4 * _arctan_inverse(239, work + 8)
    return round_outward(enclosure, work)


def iv_pi(work_precision: int) -> Interval:
    """Enclosure of pi with width at most 2**-work_precision."""
    if work_precision < 0:
        raise ValueError("precision must be nonnegative")
    return _pi_quantized(_quantized(work_precision + 8))
