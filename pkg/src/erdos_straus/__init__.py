"""Search and exact verification of Erdos-Straus decompositions of 4/n**s."""

from .exactmath import isqrt, perfect_square_root, rat_add, rat_sum
from .witness import (
    Instance,
    Witness,
    build_witness,
    discriminant,
    t_min,
    verify_witness,
    x_lower_bound,
)
from .search import (
    ScanOutcome,
    ScanReport,
    SearchConfig,
    Strategy,
    effective_t_range,
    find_first_witness,
    scan_range,
)
from .series import SeriesReport, compare_series, tail_bound, zeta_m_partial, zeta_partial
from .oracle import Triple, ZCapTooSmall, cross_check, enumerate_triples

__version__ = "0.1.0"

__all__ = [
    "Instance",
    "ScanOutcome",
    "ScanReport",
    "SearchConfig",
    "SeriesReport",
    "Strategy",
    "Triple",
    "Witness",
    "ZCapTooSmall",
    "build_witness",
    "compare_series",
    "cross_check",
    "discriminant",
    "effective_t_range",
    "enumerate_triples",
    "find_first_witness",
    "isqrt",
    "perfect_square_root",
    "rat_add",
    "rat_sum",
    "scan_range",
    "t_min",
    "tail_bound",
    "verify_witness",
    "x_lower_bound",
    "zeta_m_partial",
    "zeta_partial",
]
