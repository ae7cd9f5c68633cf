"""JSON and CSV renderings of search and series results."""

import csv
import io
import sys
from contextlib import contextmanager
from datetime import datetime, timezone
from fractions import Fraction

from .search import ScanOutcome, ScanReport, SearchConfig
from .series import SeriesReport
from .witness import Witness

CSV_COLUMNS = ["n", "found", "x", "t", "q", "y", "z", "x_tried", "t_tried"]


@contextmanager
def _unlimited_int_digits():
    # exact partial sums run to hundreds of thousands of digits
    getter = getattr(sys, "get_int_max_str_digits", None)
    if getter is None:
        yield
        return
    old = getter()
    sys.set_int_max_str_digits(0)
    try:
        yield
    finally:
        sys.set_int_max_str_digits(old)


def rat_to_json(r: Fraction) -> dict:
    with _unlimited_int_digits():
        return {"num": str(r.numerator), "den": str(r.denominator)}


def rat_from_json(d: dict) -> Fraction:
    with _unlimited_int_digits():
        return Fraction(int(d["num"]), int(d["den"]))


def manifest(command, cfg: SearchConfig, input_range, seed=None, timestamp=None):
    from . import __version__

    return {
        "command": command,
        "config": cfg.as_dict(),
        "timestamp": timestamp or datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "tool_version": __version__,
        "input_range": input_range,
        "seed": seed,
    }


def witness_to_json(w):
    return None if w is None else w.as_dict()


def outcome_to_json(o: ScanOutcome) -> dict:
    return {
        "n": o.n,
        "status": o.status,
        "witness": witness_to_json(o.witness),
        "x_tried": o.x_tried,
        "t_tried": o.t_tried,
    }


def outcome_from_json(d: dict) -> ScanOutcome:
    w = d["witness"]
    return ScanOutcome(d["n"], Witness(**w) if w else None, d["x_tried"], d["t_tried"], d["status"])


def scan_to_json(report: ScanReport, run_manifest=None) -> dict:
    return {
        "manifest": run_manifest,
        "n_min": report.n_min,
        "n_max": report.n_max,
        "s": report.s,
        "captured": report.captured,
        "total": report.total,
        "success_rate": report.success_rate,
        "failed_n": report.failed_n,
        "timed_out_n": report.timed_out_n,
        "outcomes": [outcome_to_json(o) for o in report.outcomes],
    }


def scan_from_json(d: dict) -> ScanReport:
    return ScanReport(d["n_min"], d["n_max"], d["s"], [outcome_from_json(o) for o in d["outcomes"]])


def scan_to_csv(report: ScanReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for o in report.outcomes:
        w = o.witness
        if w is None:
            writer.writerow([o.n, 0, "", "", "", "", "", o.x_tried, o.t_tried])
        else:
            writer.writerow([o.n, 1, w.x, w.t, w.q, w.y, w.z, o.x_tried, o.t_tried])
    return buf.getvalue()


def series_to_json(rep: SeriesReport, run_manifest=None) -> dict:
    return {
        "manifest": run_manifest,
        "s": rep.s,
        "n_max": rep.n_max,
        "left_exact": rat_to_json(rep.left_exact),
        "right_exact": rat_to_json(rep.right_exact),
        "zeta_m_exact": rat_to_json(rep.zeta_m_exact),
        "four_zeta_exact": rat_to_json(rep.four_zeta_exact),
        "exact_equal": rep.exact_equal,
        "left_float": repr(rep.left_float),
        "right_float": repr(rep.right_float),
        "abs_error_float": repr(rep.abs_error_float),
        "left_exact_float": repr(float(rep.left_exact)),
        "right_exact_float": repr(float(rep.right_exact)),
        "tail_bound": rat_to_json(rep.tail_bound),
        "failures": rep.failures,
        "witnesses": [outcome_to_json(o) for o in rep.witnesses],
    }


def series_from_json(d: dict) -> SeriesReport:
    return SeriesReport(
        s=d["s"],
        n_max=d["n_max"],
        left_exact=rat_from_json(d["left_exact"]),
        right_exact=rat_from_json(d["right_exact"]),
        zeta_m_exact=rat_from_json(d["zeta_m_exact"]),
        left_float=float(d["left_float"]),
        right_float=float(d["right_float"]),
        tail_bound=rat_from_json(d["tail_bound"]),
        failures=list(d["failures"]),
        witnesses=[outcome_from_json(o) for o in d["witnesses"]],
    )
