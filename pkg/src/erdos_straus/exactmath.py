"""
Exact integer and rational primitives.

Rationals are :class:`fractions.Fraction`, which is immutable and always
kept in lowest terms with a positive denominator.
"""

import math
from fractions import Fraction
from typing import Iterable, Optional


def isqrt(m: int) -> int:
    """Return floor(sqrt(m)) computed without floating point."""
    if m < 0:
        raise ValueError("isqrt of negative number: %d" % m)
    return math.isqrt(m)


def perfect_square_root(m: int) -> Optional[int]:
    """Return r with r*r == m, or None if m is not a perfect square.

    Negative input is simply not a square.
    """
    if m < 0:
        return None
    r = math.isqrt(m)
    return r if r * r == m else None


def rat_add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def rat_sum(terms: Iterable[Fraction]) -> Fraction:
    """Exact sum of many rationals.

    Adds neighbours pairwise so that operand sizes stay balanced; a left fold
    over thousands of terms is dominated by gcds of one huge denominator.
    """
    level = list(terms)
    if not level:
        return Fraction(0)
    while len(level) > 1:
        paired = [level[i] + level[i + 1] for i in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            paired.append(level[-1])
        level = paired
    return Fraction(level[0])
