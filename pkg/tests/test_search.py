import pytest
from hypothesis import given, settings, strategies as st

from erdos_straus.search import (
    EXHAUSTED,
    FOUND,
    TIMEOUT,
    SearchConfig,
    Strategy,
    effective_t_range,
    find_first_witness,
    scan_range,
    search_instance,
)
from erdos_straus.witness import Instance, Witness, verify_witness


def test_config_defaults_and_validation():
    cfg = SearchConfig()
    assert (cfg.x_multiplier, cfg.t_window, cfg.numerator_a) == (300, 500, 4)
    assert cfg.strategy is Strategy.FIRST_FOUND
    assert SearchConfig(strategy="smallest-x").strategy is Strategy.SMALLEST_X
    for kw in ({"x_multiplier": 0}, {"t_window": 0}, {"numerator_a": -1}):
        with pytest.raises(ValueError):
            SearchConfig(**kw)
    assert cfg.digest() == SearchConfig().digest()
    assert cfg.digest() != SearchConfig(t_window=499).digest()


@pytest.mark.parametrize("n, s, expected", [
    (2, 1, Witness(1, 1, 0, 2, 2)),
    (3, 1, Witness(1, 6, 0, 6, 6)),
    (4, 1, Witness(2, 1, 0, 4, 4)),
    (5, 1, Witness(2, 4, 8, 4, 20)),
    (2, 3, Witness(3, 3, 0, 12, 12)),
    (2, 2, Witness(2, 1, 0, 4, 4)),
])
def test_find_first_witness_examples(n, s, expected):
    assert find_first_witness(Instance(n, s)) == expected


def test_search_order_matches_reference_loop(reference_search):
    for n in range(2, 151):
        w = find_first_witness(Instance(n))
        assert w is not None
        assert (w.x, w.t, w.q, w.y, w.z) == reference_search(n)
    for n in range(2, 16):
        w = find_first_witness(Instance(n, 2))
        assert (w.x, w.t, w.q, w.y, w.z) == reference_search(n * n)


def test_effort_counters():
    o = search_instance(Instance(5))
    # x=2 only, t = 2, 3, 4
    assert (o.x_tried, o.t_tried, o.status) == (1, 3, FOUND)
    o = search_instance(Instance(2, 3))
    assert (o.x_tried, o.t_tried) == (1, 1)


@pytest.mark.parametrize("N, x, cfg, rng", [
    (5, 2, SearchConfig(), (2, 502)),
    (3, 1, SearchConfig(), (6, 506)),
    (8, 3, SearchConfig(t_window=1), (3, 4)),
])
def test_effective_t_range(N, x, cfg, rng):
    assert effective_t_range(N, x, cfg) == rng


def test_scan_small_range():
    rep = scan_range(2, 4, 1)
    assert rep.captured == 3
    assert rep.success_rate == 100
    assert rep.failed_n == []
    assert rep.outcomes[1].witness == Witness(1, 6, 0, 6, 6)


def test_scan_bounded_exhaustion(reference_search):
    # x in [4, 13) with only t = t_min each: no square discriminant
    cfg = SearchConfig(x_multiplier=1, t_window=1)
    assert reference_search(13, x_mult=1, t_window=1) is None
    rep = scan_range(13, 13, 1, cfg)
    assert rep.failed_n == [13]
    assert rep.success_rate == 0
    assert rep.outcomes[0].status == EXHAUSTED
    assert rep.captured + len(rep.failed_n) == rep.total
    # n=2 still succeeds at the very first (x, t)
    assert scan_range(2, 2, 1, cfg).captured == 1


def test_scan_rejects_bad_ranges():
    with pytest.raises(ValueError):
        scan_range(5, 4, 1)
    with pytest.raises(ValueError):
        scan_range(1, 4, 1)
    with pytest.raises(ValueError):
        scan_range(2, 4, 0)


def test_scan_full_classical_range():
    rep = scan_range(2, 150, 1)
    assert rep.success_rate == 100
    assert all(verify_witness(o.n, o.witness) for o in rep.outcomes)


def test_parallel_scan_is_deterministic():
    seen = []
    serial = scan_range(2, 40, 2)
    parallel = scan_range(2, 40, 2, threads=3, on_outcome=lambda o: seen.append(o.n))
    assert serial.outcomes == parallel.outcomes
    assert seen == list(range(2, 41))


def test_smallest_x_agrees_with_first_found():
    smallest = SearchConfig(strategy=Strategy.SMALLEST_X)
    for n in range(2, 101):
        a = find_first_witness(Instance(n))
        b = find_first_witness(Instance(n), smallest)
        assert b.x <= a.x
        assert b == a


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 60), st.integers(1, 3), st.integers(1, 4),
       st.integers(1, 300), st.integers(1, 500))
def test_shrinking_bounds_never_creates_witnesses(n, s, xm, tw, tw2):
    small = SearchConfig(x_multiplier=xm, t_window=min(tw, tw2))
    big = SearchConfig(x_multiplier=xm + 1, t_window=max(tw, tw2))
    if find_first_witness(Instance(n, s), big) is None:
        assert find_first_witness(Instance(n, s), small) is None


def test_time_budget_marks_timeout():
    # a tiny window makes the search walk many x values; zero budget stops at once
    o = search_instance(Instance(89, 3), SearchConfig(t_window=1), time_budget_ms=0)
    assert o.status == TIMEOUT and o.witness is None
    rep = scan_range(89, 89, 3, SearchConfig(t_window=1), time_budget_ms=0)
    assert rep.timed_out_n == [89] and rep.failed_n == [89]


def test_cache_roundtrip(tmp_path):
    from erdos_straus.cache import WitnessCache

    cache = WitnessCache(tmp_path)
    cfg = SearchConfig()
    first = scan_range(2, 30, 2, cfg, cache=cache)
    assert len(list(tmp_path.glob("*.json"))) == 29
    calls = []

    class Spy(WitnessCache):
        def put(self, *a):
            calls.append(a)
            super().put(*a)

    second = scan_range(2, 30, 2, cfg, cache=Spy(tmp_path))
    assert second.outcomes == first.outcomes
    assert calls == []
    # different config means different keys
    scan_range(2, 3, 2, SearchConfig(t_window=400), cache=cache)
    assert len(list(tmp_path.glob("*.json"))) == 31


def test_cache_rejects_tampered_witness(tmp_path):
    import json
    from erdos_straus.cache import WitnessCache

    cache = WitnessCache(tmp_path)
    cfg = SearchConfig()
    scan_range(5, 5, 1, cfg, cache=cache)
    (path,) = tmp_path.glob("*.json")
    data = json.loads(path.read_text())
    data["witness"]["z"] += 1
    path.write_text(json.dumps(data))
    assert cache.get(5, 1, cfg) is None
    assert scan_range(5, 5, 1, cfg, cache=cache).outcomes[0].witness == Witness(2, 4, 8, 4, 20)


def test_parallel_block_search_matches_serial_counters(monkeypatch):
    import erdos_straus.search as search_mod

    # small probe and blocks so several n go through the block phase
    monkeypatch.setattr(search_mod, "PROBE_X", 2)
    monkeypatch.setattr(search_mod, "BLOCK_X", 3)
    for cfg in (SearchConfig(), SearchConfig(strategy=Strategy.SMALLEST_X), SearchConfig(t_window=5)):
        serial = scan_range(2, 60, 2, cfg)
        parallel = scan_range(2, 60, 2, cfg, threads=3)
        assert parallel.outcomes == serial.outcomes
        assert any(o.x_tried > 2 for o in serial.outcomes)


def test_parallel_block_search_exhaustion(monkeypatch):
    import erdos_straus.search as search_mod

    monkeypatch.setattr(search_mod, "PROBE_X", 1)
    monkeypatch.setattr(search_mod, "BLOCK_X", 2)
    cfg = SearchConfig(x_multiplier=1, t_window=1)
    serial = scan_range(10, 30, 1, cfg)
    parallel = scan_range(10, 30, 1, cfg, threads=2)
    assert parallel.outcomes == serial.outcomes
    assert 13 in parallel.failed_n


def test_parallel_timeout():
    rep = scan_range(89, 90, 3, SearchConfig(t_window=1), threads=2, time_budget_ms=0)
    assert rep.timed_out_n == [89, 90]
