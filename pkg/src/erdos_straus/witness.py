"""
Witnesses for 4/N = 1/x + 1/y + 1/z built from a square discriminant.

For x >= N//4 + 1 and t >= 1 put d = 4x - N and

    disc = t**2 * d**2 - 2*t*N*x.

When disc = q**2 is a perfect square, y = t*d - q and z = t*d + q satisfy
y + z = 2*t*d and y*z = 2*t*N*x, hence 1/y + 1/z = d/(N*x) = 4/N - 1/x.

The numerator 4 is a parameter ``a`` throughout; the identity holds for any
positive a with 4 replaced by a.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exactmath import perfect_square_root

DEFAULT_NUMERATOR = 4


@dataclass(frozen=True)
class Instance:
    """The target denominator N = n**s."""

    n: int
    s: int = 1
    N: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 2:
            raise ValueError("n must be an integer >= 2, got %r" % (self.n,))
        if isinstance(self.s, bool) or not isinstance(self.s, int) or self.s < 1:
            raise ValueError("s must be an integer >= 1, got %r" % (self.s,))
        object.__setattr__(self, "N", self.n ** self.s)


@dataclass(frozen=True)
class Witness:
    x: int
    t: int
    q: int
    y: int
    z: int

    def triple(self) -> tuple:
        """(x, y, z) sorted ascending."""
        return tuple(sorted((self.x, self.y, self.z)))

    def as_dict(self) -> dict:
        return {"x": self.x, "t": self.t, "q": self.q, "y": self.y, "z": self.z}


def x_lower_bound(N: int, a: int = DEFAULT_NUMERATOR) -> int:
    """Smallest x with a*x - N >= 1."""
    return N // a + 1


def discriminant(N: int, x: int, t: int, a: int = DEFAULT_NUMERATOR) -> int:
    d = a * x - N
    return t * t * d * d - 2 * t * N * x


def t_min(N: int, x: int, a: int = DEFAULT_NUMERATOR) -> int:
    """Start of the t window: max(1, floor(2*N*x / (a*x - N)**2))."""
    d = a * x - N
    assert d >= 1, "x below lower bound"
    return max(1, (2 * N * x) // (d * d))


def build_witness(N: int, x: int, t: int, a: int = DEFAULT_NUMERATOR) -> Optional[Witness]:
    """Return the witness for (N, x, t), or None when the discriminant is
    negative, not a perfect square, or yields y <= 0."""
    d = a * x - N
    if d < 1 or t < 1:
        return None
    q = perfect_square_root(t * t * d * d - 2 * t * N * x)
    if q is None:
        return None
    y = t * d - q
    z = t * d + q
    if y > 0 and z > 0:
        return Witness(x, t, q, y, z)
    return None


def verify_witness(N: int, w: Witness, a: int = DEFAULT_NUMERATOR) -> bool:
    """Check a witness against N exactly.

    All three must hold: q**2 equals the discriminant; y*z == 2tNx and
    y + z == 2t(ax - N); and 1/x + 1/y + 1/z == a/N as reduced rationals.
    """
    if min(w.x, w.t, w.y, w.z) < 1 or w.q < 0 or N < 1:
        return False
    d = a * w.x - N
    if w.q * w.q != discriminant(N, w.x, w.t, a):
        return False
    if w.y * w.z != 2 * w.t * N * w.x or w.y + w.z != 2 * w.t * d:
        return False
    return Fraction(1, w.x) + Fraction(1, w.y) + Fraction(1, w.z) == Fraction(a, N)
