"""
Partial sums of sum_{n>=2} 1/n**s and of the witness series
sum_{n>=2} (1/x_n + 1/y_n + 1/z_n), whose terms each equal 4/n**s.

Sums are exact. The float fields of :class:`SeriesReport` are accumulated
term by term in double precision, in ascending n, so that they reproduce
the output of a plain float loop digit for digit.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from .exactmath import rat_sum
from .search import SearchConfig, ScanOutcome, scan_range


def _check_s(s):
    if isinstance(s, bool) or not isinstance(s, int) or s < 2:
        raise ValueError("series needs an integer s >= 2 (diverges otherwise), got %r" % (s,))


def zeta_partial(s: int, n_max: int) -> Fraction:
    """Exact sum of n**-s for n = 2..n_max."""
    _check_s(s)
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    return rat_sum(Fraction(1, n ** s) for n in range(2, n_max + 1))


def tail_bound(s: int, n_max: int) -> Fraction:
    """Upper bound n_max**(1-s)/(s-1) on the tail sum over n > n_max
    (integral test)."""
    _check_s(s)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return Fraction(1, (s - 1) * n_max ** (s - 1))


def _witness_outcomes(s, n_max, cfg, **scan_kwargs) -> List[ScanOutcome]:
    return scan_range(2, n_max, s, cfg, **scan_kwargs).outcomes


def _reciprocal_sum(outcomes) -> Tuple[Fraction, List[int]]:
    terms = []
    failures = []
    for o in outcomes:
        if o.witness is None:
            failures.append(o.n)
            continue
        w = o.witness
        terms.append(Fraction(1, w.x) + Fraction(1, w.y) + Fraction(1, w.z))
    return rat_sum(terms), failures


def zeta_m_partial(s: int, n_max: int, cfg: SearchConfig = SearchConfig(),
                   **scan_kwargs) -> Tuple[Fraction, List[int]]:
    """Exact sum of 1/x + 1/y + 1/z over the witnesses for n = 2..n_max.

    An n without a witness inside the search bounds contributes nothing and
    is listed in the returned failures.
    """
    _check_s(s)
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    return _reciprocal_sum(_witness_outcomes(s, n_max, cfg, **scan_kwargs))


@dataclass
class SeriesReport:
    s: int
    n_max: int
    left_exact: Fraction
    right_exact: Fraction
    zeta_m_exact: Fraction
    left_float: float
    right_float: float
    tail_bound: Fraction
    failures: List[int] = field(default_factory=list)
    witnesses: List[ScanOutcome] = field(default_factory=list, repr=False)

    @property
    def exact_equal(self) -> bool:
        return self.left_exact == self.right_exact

    @property
    def abs_error_float(self) -> float:
        return abs(self.left_float - self.right_float)

    @property
    def four_zeta_exact(self) -> Fraction:
        """4 * (partial zeta - 1), the other orientation of the comparison."""
        return 4 * self.left_exact


def compare_series(s: int, n_max: int, cfg: SearchConfig = SearchConfig(),
                   **scan_kwargs) -> SeriesReport:
    """Compare sum 1/n**s against (witness reciprocal sum)/4 up to n_max."""
    _check_s(s)
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    outcomes = _witness_outcomes(s, n_max, cfg, **scan_kwargs)
    zeta_m, failures = _reciprocal_sum(outcomes)

    left_float = 0.0
    right_float = 0.0
    for o in outcomes:
        left_float += 1 / (o.n ** s)
        if o.witness is not None:
            w = o.witness
            right_float += (1 / w.x + 1 / w.y + 1 / w.z) / 4

    return SeriesReport(
        s=s,
        n_max=n_max,
        left_exact=zeta_partial(s, n_max),
        right_exact=zeta_m / 4,
        zeta_m_exact=zeta_m,
        left_float=left_float,
        right_float=right_float,
        tail_bound=tail_bound(s, n_max),
        failures=failures,
        witnesses=outcomes,
    )
