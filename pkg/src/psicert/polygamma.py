"""Certified rational enclosures of digamma, trigamma, and derived constants.

The enclosures combine the recurrences ``psi(x+1) = psi(x) + 1/x`` and
``psi'(x+1) = psi'(x) - 1/x**2`` with two-sided truncations of the
asymptotic expansions at a shifted argument ``y >= shift_target``:

* ``psi(y+1)`` lies in ``[U - 1/(252 y^6), U]`` where
  ``U = ln y + 1/(2y) - 1/(12 y^2) + 1/(120 y^4)``;
* ``psi'(y+1)`` lies in ``[V - 1/(30 y^9), V]`` where
  ``V = 1/y - 1/(2 y^2) + 1/(6 y^3) - 1/(30 y^5) + 1/(42 y^7)``.

Both windows follow from the enveloping property of the expansions, whose
error has the sign and magnitude of the first omitted term.  Larger
``shift_target`` narrows the windows; the recurrence steps are exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .elementary import iv_exp, iv_ln, iv_pi
from .interval import DomainError, Interval

__all__ = [
    "batir_bstar_enclosure",
    "digamma_enclosure",
    "digamma_zero",
    "euler_gamma_enclosure",
    "trigamma_enclosure",
]

DEFAULT_SHIFT_TARGET = Fraction(10)


def _validate(x: Fraction, shift_target: Fraction) -> tuple[Fraction, Fraction]:
    x = Fraction(x)
    shift_target = Fraction(shift_target)
    if x <= 0:
        raise DomainError(f"argument must be positive, got {x}")
    if shift_target < 1:
        raise ValueError("shift target must be at least 1")
    return x, shift_target


def _shift_count(x: Fraction, shift_target: Fraction) -> int:
    """Smallest n >= 0 with x + n - 1 >= shift_target."""
    return max(0, math.ceil(shift_target + 1 - x))


def _ln_precision(shift_target: Fraction) -> int:
    # The logarithm must be evaluated well below the asymptotic window
    # width ~ shift_target**-6 so it never dominates the enclosure.
    return 6 * max(4, math.ceil(shift_target).bit_length()) + 48


def digamma_enclosure(
    x: Fraction | int,
    shift_target: Fraction | int = DEFAULT_SHIFT_TARGET,
) -> Interval:
    """Enclosure of ``psi(x)`` for rational ``x > 0``.

    Width decreases like ``shift_target**-6`` plus the logarithm's rounding,
    and is weakly decreasing as ``shift_target`` grows.
    """
    x, shift_target = _validate(Fraction(x), Fraction(shift_target))
    n = _shift_count(x, shift_target)
    y = x + n - 1  # psi(x) = psi(y + 1) - sum_{k=0}^{n-1} 1/(x + k)
    upper_tail = 1 / (2 * y) - 1 / (12 * y**2) + 1 / (120 * y**4)
    window = Fraction(1, 252) / y**6
    enclosure = iv_ln(y, _ln_precision(shift_target)) + Interval(
        upper_tail - window, upper_tail
    )
    correction = sum((Fraction(1) / (x + k) for k in range(n)), start=Fraction(0))
    return enclosure - correction


def trigamma_enclosure(
    x: Fraction | int,
    shift_target: Fraction | int = DEFAULT_SHIFT_TARGET,
) -> Interval:
    """Enclosure of ``psi'(x)`` for rational ``x > 0``; fully rational arithmetic."""
    x, shift_target = _validate(Fraction(x), Fraction(shift_target))
    n = _shift_count(x, shift_target)
    y = x + n - 1  # psi'(x) = psi'(y + 1) + sum_{k=0}^{n-1} 1/(x + k)^2
    upper = 1 / y - 1 / (2 * y**2) + 1 / (6 * y**3) - 1 / (30 * y**5) + 1 / (42 * y**7)
    window = Fraction(1, 30) / y**9
    correction = sum((Fraction(1) / (x + k) ** 2 for k in range(n)), start=Fraction(0))
    return Interval(upper - window, upper) + correction


def euler_gamma_enclosure(
    shift_target: Fraction | int = DEFAULT_SHIFT_TARGET,
) -> Interval:
    """Enclosure of the Euler-Mascheroni constant as ``-psi(1)``."""
    return -digamma_enclosure(1, shift_target)


@lru_cache(maxsize=None)
def _bstar_cached(shift_target: Fraction, work_precision: int) -> Interval:
    two_gamma = euler_gamma_enclosure(shift_target) * 2
    return iv_pi(work_precision) ** 2 / (6 * iv_exp(two_gamma, work_precision))


def batir_bstar_enclosure(
    shift_target: Fraction | int = DEFAULT_SHIFT_TARGET,
    work_precision: int = 64,
) -> Interval:
    """Enclosure of ``pi**2 / (6 e**(2 gamma))``, about 0.5181."""
    if work_precision < 8:
        raise ValueError("work precision must be at least 8")
    return _bstar_cached(Fraction(shift_target), work_precision)


def digamma_zero(tolerance: Fraction | int = Fraction(1, 10**6)) -> Interval:
    """Enclosure of the positive root of psi, about 1.4616, width <= tolerance.

    Bisection on [1, 2] (psi(1) = -gamma < 0 < 1 - gamma = psi(2)) with
    certified sign tests.  The shift target starts high enough that the
    enclosure width is far below the requested tolerance, and escalates
    when a probe's enclosure straddles zero; if escalation stalls, the
    probe moves to a quarter point of the bracket instead.
    """
    tolerance = Fraction(tolerance)
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    # 1/(252 st^6) <= tolerance/64  =>  st >= (64 / (252 tol))^(1/6)
    shift_target = Fraction(10)
    while 64 * Fraction(1, 252) / shift_target**6 > tolerance:
        shift_target *= 2

    lo, hi = Fraction(1), Fraction(2)
    while hi - lo > tolerance:
        probes = [(lo + hi) / 2, (3 * lo + hi) / 4, (lo + 3 * hi) / 4]
        advanced = False
        for probe in probes:
            value = digamma_enclosure(probe, shift_target)
            attempts = 0
            while value.lo <= 0 <= value.hi and attempts < 2:
                shift_target *= 2
                value = digamma_enclosure(probe, shift_target)
                attempts += 1
            if value.hi < 0:
                lo, advanced = probe, True
                break
            if value.lo > 0:
                hi, advanced = probe, True
                break
        if not advanced:  # pragma: no cover - defensive; probes span the bracket
            raise ArithmeticError("bisection could not certify a sign at any probe")
    return Interval(lo, hi)
