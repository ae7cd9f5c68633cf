"""
Bounded (x, t) search for witnesses and range scans over n.

The default configuration walks x over [N//4 + 1, 300*N) and, for each x,
t over [t_min, t_min + 500), returning the first witness met.
"""

import enum
import hashlib
import json
import os
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, List, Optional, Tuple

from .witness import Instance, Witness, build_witness, t_min, verify_witness, x_lower_bound

FOUND = "found"
EXHAUSTED = "exhausted"
TIMEOUT = "timeout"


class Strategy(str, enum.Enum):
    FIRST_FOUND = "first-found"
    SMALLEST_X = "smallest-x"


@dataclass(frozen=True)
class SearchConfig:
    x_multiplier: int = 300
    t_window: int = 500
    numerator_a: int = 4
    strategy: Strategy = Strategy.FIRST_FOUND

    def __post_init__(self):
        for name in ("x_multiplier", "t_window", "numerator_a"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError("%s must be a positive integer, got %r" % (name, value))
        object.__setattr__(self, "strategy", Strategy(self.strategy))

    def as_dict(self) -> dict:
        d = asdict(self)
        d["strategy"] = self.strategy.value
        return d

    def digest(self) -> str:
        """Stable hash of the fields; used as part of cache keys."""
        blob = json.dumps(self.as_dict(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


@dataclass(frozen=True)
class ScanOutcome:
    n: int
    witness: Optional[Witness]
    x_tried: int
    t_tried: int
    status: str = EXHAUSTED

    @property
    def found(self) -> bool:
        return self.witness is not None


@dataclass
class ScanReport:
    n_min: int
    n_max: int
    s: int
    outcomes: List[ScanOutcome] = field(default_factory=list)

    @property
    def total(self) -> int:
        return self.n_max - self.n_min + 1

    @property
    def captured(self) -> int:
        return sum(1 for o in self.outcomes if o.found)

    @property
    def success_rate(self) -> float:
        return 100 * self.captured / self.total

    @property
    def failed_n(self) -> List[int]:
        return [o.n for o in self.outcomes if not o.found]

    @property
    def timed_out_n(self) -> List[int]:
        return [o.n for o in self.outcomes if o.status == TIMEOUT]


def effective_t_range(N: int, x: int, cfg: SearchConfig = SearchConfig()) -> Tuple[int, int]:
    """Half-open window [start, end) of t values tried for this x."""
    start = t_min(N, x, cfg.numerator_a)
    return start, start + cfg.t_window


def _search_block(N, cfg, x_start, x_stop, deadline=None):
    """Search x in [x_start, x_stop). Returns (witness, x_tried, t_tried, status)."""
    a = cfg.numerator_a
    x_tried = t_tried = 0
    smallest_x = cfg.strategy is Strategy.SMALLEST_X
    for x in range(x_start, x_stop):
        if deadline is not None and time.monotonic() > deadline:
            return None, x_tried, t_tried, TIMEOUT
        x_tried += 1
        d = a * x - N
        assert d >= 1
        start = max(1, (2 * N * x) // (d * d))
        best = None
        for t in range(start, start + cfg.t_window):
            t_tried += 1
            w = build_witness(N, x, t, a)
            if w is None:
                continue
            if not smallest_x:
                return w, x_tried, t_tried, FOUND
            if best is None or w.t < best.t:
                best = w
        if best is not None:
            return best, x_tried, t_tried, FOUND
    return None, x_tried, t_tried, EXHAUSTED


def _x_range(N, cfg):
    return x_lower_bound(N, cfg.numerator_a), cfg.x_multiplier * N


def _search(N: int, cfg: SearchConfig, deadline: Optional[float] = None):
    return _search_block(N, cfg, *_x_range(N, cfg), deadline)


def _deadline(time_budget_ms):
    if time_budget_ms is None:
        return None
    return time.monotonic() + time_budget_ms / 1000.0


def search_instance(inst: Instance, cfg: SearchConfig = SearchConfig(),
                    time_budget_ms: Optional[int] = None) -> ScanOutcome:
    """Run the bounded search for one instance and record the effort spent."""
    w, x_tried, t_tried, status = _search(inst.N, cfg, _deadline(time_budget_ms))
    return ScanOutcome(inst.n, w, x_tried, t_tried, status)


def find_first_witness(inst: Instance, cfg: SearchConfig = SearchConfig()) -> Optional[Witness]:
    """First witness in search order, or None if the bounds are exhausted.

    A None result says nothing about the conjecture, only about the bounds.
    """
    return _search(inst.N, cfg)[0]


def _scan_one(args):
    n, s, cfg, time_budget_ms = args
    return search_instance(Instance(n, s), cfg, time_budget_ms)


# Parallel scans first give every n a short serial probe over its smallest
# x values; the few n that survive it get their x range cut into blocks
# searched by all workers at once.
PROBE_X = 64
BLOCK_X = 256


def _probe_one(args):
    n, s, cfg, time_budget_ms, probe_x = args
    N = n ** s
    lo, hi = _x_range(N, cfg)
    # CLOCK_MONOTONIC is system-wide, so the deadline stays valid in other workers
    deadline = _deadline(time_budget_ms)
    w, x_tried, t_tried, status = _search_block(N, cfg, lo, min(hi, lo + probe_x), deadline)
    return w, x_tried, t_tried, status, deadline


def _block_one(args):
    N, cfg, x_start, x_stop, deadline = args
    return _search_block(N, cfg, x_start, x_stop, deadline)


def _blocked_search(pool, workers, n, s, cfg, x_start, x_tried, t_tried, deadline):
    """Continue the search for n from x_start with blocks in flight on the pool.

    Blocks are consumed in x order, so the result and effort counts match a
    serial search exactly.
    """
    N = n ** s
    hi = cfg.x_multiplier * N
    pending = deque()
    next_x = x_start

    def submit():
        nonlocal next_x
        stop = min(hi, next_x + BLOCK_X)
        pending.append(pool.submit(_block_one, (N, cfg, next_x, stop, deadline)))
        next_x = stop

    try:
        while next_x < hi and len(pending) < 2 * workers:
            submit()
        while pending:
            w, xb, tb, status = pending.popleft().result()
            x_tried += xb
            t_tried += tb
            if status != EXHAUSTED:
                return ScanOutcome(n, w, x_tried, t_tried, status)
            if next_x < hi:
                submit()
        return ScanOutcome(n, None, x_tried, t_tried, EXHAUSTED)
    finally:
        for fut in pending:
            fut.cancel()


def _parallel_outcomes(todo, threads, pool):
    probe_x = PROBE_X
    probes = pool.map(_probe_one, [task + (probe_x,) for task in todo],
                      chunksize=max(1, len(todo) // (threads * 8)))
    for (n, s, cfg, _), probe in zip(todo, probes):
        w, x_tried, t_tried, status, deadline = probe
        N = n ** s
        lo, hi = _x_range(N, cfg)
        if status != EXHAUSTED or lo + probe_x >= hi:
            yield ScanOutcome(n, w, x_tried, t_tried, status)
        else:
            yield _blocked_search(pool, threads, n, s, cfg, lo + probe_x,
                                  x_tried, t_tried, deadline)


def available_parallelism() -> int:
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:
        return os.cpu_count() or 1


def scan_range(n_min: int, n_max: int, s: int = 1, cfg: SearchConfig = SearchConfig(),
               threads: int = 1, time_budget_ms: Optional[int] = None, cache=None,
               on_outcome: Optional[Callable[[ScanOutcome], None]] = None) -> ScanReport:
    """Search every n in [n_min, n_max] for a witness of 4/n**s.

    With ``threads > 1`` the searches run in worker processes, and a single
    expensive n is itself split across workers by x range. Outcomes are
    always delivered (to ``on_outcome`` and the report) in ascending n.
    ``cache`` is anything with ``get(n, s, cfg)`` and ``put(n, s, cfg, outcome)``.
    """
    if isinstance(n_min, bool) or not isinstance(n_min, int) or not isinstance(n_max, int):
        raise TypeError("n_min and n_max must be integers")
    if n_min < 2 or n_max < n_min:
        raise ValueError("need 2 <= n_min <= n_max, got [%d, %d]" % (n_min, n_max))
    if s < 1:
        raise ValueError("s must be >= 1")

    ns = range(n_min, n_max + 1)
    cached = {}
    if cache is not None:
        for n in ns:
            hit = cache.get(n, s, cfg)
            if hit is not None:
                cached[n] = hit
    todo = [(n, s, cfg, time_budget_ms) for n in ns if n not in cached]

    if threads > 1 and todo:
        pool = ProcessPoolExecutor(max_workers=threads)
        fresh = _parallel_outcomes(todo, threads, pool)
    else:
        pool = None
        fresh = map(_scan_one, todo)

    report = ScanReport(n_min, n_max, s)
    try:
        for n in ns:
            if n in cached:
                outcome = cached[n]
            else:
                outcome = next(fresh)
                assert outcome.n == n
                if cache is not None and outcome.status != TIMEOUT:
                    cache.put(n, s, cfg, outcome)
            if outcome.witness is not None:
                assert verify_witness(n ** s, outcome.witness, cfg.numerator_a)
            report.outcomes.append(outcome)
            if on_outcome is not None:
                on_outcome(outcome)
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    return report
