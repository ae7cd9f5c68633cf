"""
Brute-force enumeration of 4/N = 1/x + 1/y + 1/z, independent of the
discriminant parametrization.

With x <= y <= z we have 4/N <= 3/x, so x <= 3N/4, and 1/x < 4/N gives
x > N/4. For fixed x the remainder r = 4/N - 1/x needs 1/y < r and
2/y >= r (because z >= y), which bounds y; z is then forced.
"""

from fractions import Fraction
from typing import List, NamedTuple

from .witness import Witness


class Triple(NamedTuple):
    x: int
    y: int
    z: int


class ZCapTooSmall(ValueError):
    """Raised when z_cap cannot contain the witness being cross-checked."""


def enumerate_triples(N: int, z_cap: int) -> List[Triple]:
    """All triples x <= y <= z <= z_cap with 1/x + 1/y + 1/z == 4/N, sorted."""
    if N < 2:
        raise ValueError("N must be >= 2")
    found = []
    for x in range(N // 4 + 1, (3 * N) // 4 + 1):
        if x > z_cap:
            break
        # r = rn / rd
        rn = 4 * x - N
        rd = N * x
        y_lo = max(x, rd // rn + 1)
        y_hi = min(z_cap, (2 * rd) // rn)
        for y in range(y_lo, y_hi + 1):
            num = rd * y
            den = rn * y - rd
            if num % den == 0:
                z = num // den
                if z <= z_cap:
                    found.append(Triple(x, y, z))
    return sorted(found)


def cross_check(N: int, w: Witness, z_cap: int) -> bool:
    """True iff the witness's sorted triple is among the enumerated triples."""
    if max(w.x, w.y, w.z) > z_cap:
        raise ZCapTooSmall("z_cap=%d below witness maximum %d" % (z_cap, max(w.x, w.y, w.z)))
    return Triple(*w.triple()) in enumerate_triples(N, z_cap)


def is_decomposition(N: int, triple) -> bool:
    x, y, z = triple
    return Fraction(1, x) + Fraction(1, y) + Fraction(1, z) == Fraction(4, N)
