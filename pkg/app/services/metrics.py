from dataclasses import dataclass
from typing import Iterable

import numpy as np

from app.errors import (
    EmptyIndexSetException,
    IndexOutOfRangeException,
    LengthMismatchException,
    ZeroTruthValueException,
)
from app.services.series import TimeSeries


@dataclass(frozen=True)
class ErrorReport:
    rmse: float
    mape: float
    count: int


def _paired_values(imputed: TimeSeries, truth: TimeSeries, indices: Iterable[int]):
    if len(imputed) != len(truth):
        raise LengthMismatchException(f"Series lengths differ: {len(imputed)} vs {len(truth)}.")
    imputed.require_complete("Error evaluation")
    truth.require_complete("Error evaluation")

    positions = np.asarray(list(indices), dtype=int).reshape(-1)
    if positions.size == 0:
        raise EmptyIndexSetException("Errors need at least one evaluated index.")
    out_of_range = positions[(positions < 0) | (positions >= len(truth))]
    if out_of_range.size:
        raise IndexOutOfRangeException(
            f"Indices {out_of_range.tolist()} fall outside 0..{len(truth) - 1}."
        )
    return imputed.values[positions], truth.values[positions]


def rmse(imputed: TimeSeries, truth: TimeSeries, indices: Iterable[int]) -> float:
    """Root mean square error over the given 0-based positions."""
    estimates, actual = _paired_values(imputed, truth, indices)
    return float(np.sqrt(np.mean((estimates - actual) ** 2)))


def mape(imputed: TimeSeries, truth: TimeSeries, indices: Iterable[int]) -> float:
    """Mean absolute percentage error as a fraction (0.5 is 50%)."""
    estimates, actual = _paired_values(imputed, truth, indices)
    if np.any(actual == 0):
        raise ZeroTruthValueException("MAPE is undefined where the true value is zero.")
    return float(np.mean(np.abs(estimates - actual) / np.abs(actual)))


def evaluate(imputed: TimeSeries, truth: TimeSeries, indices: Iterable[int]) -> ErrorReport:
    positions = list(indices)
    return ErrorReport(
        rmse=rmse(imputed, truth, positions),
        mape=mape(imputed, truth, positions),
        count=len(positions),
    )
