"""CSV readers and writers for bids, predictions, experiment points, and sweeps.

All files are UTF-8 with a mandatory header row and `.` as decimal separator.
Emitted tables use a fixed 6-significant-digit format so outputs diff cleanly.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import IO, Iterable, Sequence

from .fitting import ExperimentPoint, PredictionRecord
from .market import CustomerBid

__all__ = [
    "BID_HEADER",
    "PREDICTION_HEADER",
    "POINT_HEADER",
    "SWEEP_HEADER",
    "read_bids",
    "read_predictions",
    "read_experiment_points",
    "write_sweep_csv",
    "format_sig",
]

BID_HEADER = ("customer_id", "bid")
PREDICTION_HEADER = ("y_true", "y_pred")
POINT_HEADER = ("q", "performance")
SWEEP_HEADER = (
    "value",
    "expected_profit",
    "optimal_price",
    "optimal_q",
    "empirical_mean",
    "empirical_std",
)


def format_sig(x: float) -> str:
    """Fixed 6-significant-digit rendering used in all emitted tables."""
    return f"{x:.6g}"


def _read_rows(path, header: Sequence[str]) -> list[tuple[int, list[str]]]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        first = next(reader, None)
        if first is None or [cell.strip() for cell in first] != list(header):
            raise ValueError(f"{path}: expected header {','.join(header)!r}")
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise ValueError(
                    f"{path}:{lineno}: expected {len(header)} fields, got {len(row)}"
                )
            rows.append((lineno, row))
    return rows


def _parse_float(path, lineno: int, name: str, value: str) -> float:
    try:
        return float(value)
    except ValueError:
        raise ValueError(
            f"{path}:{lineno}: field {name} must be a number, got {value!r}"
        ) from None


def read_bids(path) -> list[CustomerBid]:
    """Load sealed bids from a `customer_id,bid` CSV file."""
    bids = []
    for lineno, (cid, raw) in _read_rows(path, BID_HEADER):
        value = _parse_float(path, lineno, "bid", raw)
        try:
            bids.append(CustomerBid(customer_id=cid, bid=value))
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from None
    return bids


def read_predictions(path) -> list[PredictionRecord]:
    """Load prediction pairs from a `y_true,y_pred` CSV file."""
    records = []
    for lineno, (y_true, y_pred) in _read_rows(path, PREDICTION_HEADER):
        records.append(
            PredictionRecord(
                y_true=_parse_float(path, lineno, "y_true", y_true),
                y_pred=_parse_float(path, lineno, "y_pred", y_pred),
            )
        )
    return records


def read_experiment_points(path) -> list[ExperimentPoint]:
    """Load experiment points from a `q,performance` CSV file."""
    points = []
    for lineno, (q, alpha) in _read_rows(path, POINT_HEADER):
        size = _parse_float(path, lineno, "q", q)
        perf = _parse_float(path, lineno, "performance", alpha)
        try:
            points.append(ExperimentPoint(q=size, alpha=perf))
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from None
    return points


def write_sweep_csv(rows: Iterable, out: IO[str] | str | Path) -> None:
    """Write sweep result rows with the fixed sweep header."""
    own = isinstance(out, (str, Path))
    fh = open(out, "w", newline="", encoding="utf-8") if own else out
    try:
        writer = csv.writer(fh)
        writer.writerow(SWEEP_HEADER)
        for row in rows:
            writer.writerow(
                [
                    format_sig(row.value),
                    format_sig(row.expected_profit),
                    format_sig(row.optimal_price),
                    format_sig(row.optimal_q),
                    format_sig(row.empirical_mean),
                    format_sig(row.empirical_std),
                ]
            )
    finally:
        if own:
            fh.close()
