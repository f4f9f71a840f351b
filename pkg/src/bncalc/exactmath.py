"""Exact integer and rational arithmetic helpers.

Python integers are already unbounded, and :class:`fractions.Fraction`
keeps every value in lowest terms with a positive denominator, so the
rational type is simply re-exported.  What this module adds is a
thread-safe factorial cache and a division that refuses to round.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

__all__ = [
    "ExactRational",
    "NonIntegralResult",
    "as_integer",
    "binomial",
    "decimal_str",
    "exact_div",
    "factorial",
]

ExactRational = Fraction


class NonIntegralResult(ArithmeticError):
    """An integer quotient was required but the division left a remainder."""

    def __init__(self, numerator: int, denominator: int) -> None:
        self.numerator = numerator
        self.denominator = denominator
        super().__init__(f"{decimal_str(numerator)} is not divisible by {decimal_str(denominator)}")


_fact_cache: list[int] = [1]
_fact_lock = threading.Lock()


def factorial(n: int) -> int:
    """Return ``n!``, extending a shared cache so each value is built once."""
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    cache = _fact_cache
    if n < len(cache):
        return cache[n]
    with _fact_lock:
        # the list only ever grows; readers outside the lock see a valid prefix
        value = cache[-1]
        for k in range(len(cache), n + 1):
            value *= k
            cache.append(value)
        return cache[n]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def exact_div(p: int, q: int) -> int:
    if q == 0:
        raise ZeroDivisionError("exact_div by zero")
    quotient, remainder = divmod(p, q)
    if remainder:
        raise NonIntegralResult(p, q)
    return quotient


def as_integer(value: Fraction) -> int:
    """Certify that ``value`` is an integer and return it."""
    if value.denominator != 1:
        raise NonIntegralResult(value.numerator, value.denominator)
    return value.numerator


_DIRECT_DIGITS = 1000


def decimal_str(value: int | Fraction) -> str:
    """Exact decimal rendering of an integer (or ``p/q`` for a fraction).

    Works past the interpreter's int-to-str digit limit by splitting the
    number at a power of ten and rendering both halves.
    """
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return decimal_str(value.numerator)
        return f"{decimal_str(value.numerator)}/{decimal_str(value.denominator)}"
    if value < 0:
        return "-" + decimal_str(-value)
    if value.bit_length() < _DIRECT_DIGITS * 3:
        return str(value)
    return _split_digits(value, 0)


def _split_digits(n: int, width: int) -> str:
    # width > 0 means left-pad with zeros to exactly that many digits
    if n.bit_length() < _DIRECT_DIGITS * 3:
        s = str(n)
        return s.zfill(width) if width else s
    half = int(n.bit_length() * 0.30103) // 2
    high, low = divmod(n, 10**half)
    head = _split_digits(high, width - half if width else 0)
    return head + _split_digits(low, half)
