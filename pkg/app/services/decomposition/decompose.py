from dataclasses import dataclass
from typing import Optional

import numpy as np
import pandas as pd

from app import logger
from app.errors import FrequencyTooLowException, SeriesTooShortException
from app.services.decomposition.loess import loess_smooth
from app.services.series import TimeSeries
from app.utils.enums import DecompositionMethod

DEFAULT_INNER_ITERATIONS = 2
MIN_TREND_NEIGHBOURS = 10


@dataclass(frozen=True)
class Decomposition:
    """Additive split of a series. NaN in trend/remainder marks an undefined point."""
    observed: np.ndarray
    trend: np.ndarray
    seasonal: np.ndarray
    remainder: np.ndarray
    method: DecompositionMethod

    def to_frame(self, time_index: Optional[np.ndarray] = None) -> pd.DataFrame:
        n = self.observed.size
        return pd.DataFrame({
            "time": np.arange(1, n + 1) if time_index is None else time_index,
            "observed": self.observed,
            "trend": self.trend,
            "seasonal": self.seasonal,
            "remainder": self.remainder,
        })


def _check_seasonal_input(series: TimeSeries, operation: str) -> None:
    series.require_complete(operation)
    f, n = series.frequency, len(series)
    if f < 2:
        raise FrequencyTooLowException(f"{operation} needs frequency >= 2, got {f}.")
    if n < 2 * f:
        raise SeriesTooShortException(f"{operation} needs at least two full periods ({2 * f}), got {n}.")


def _periodic_seasonal(detrended: np.ndarray, frequency: int) -> np.ndarray:
    """Per-phase means, centered to a zero period sum and tiled over the series."""
    phase_means = np.array([np.nanmean(detrended[j::frequency]) for j in range(frequency)])
    phase_means -= phase_means.mean()
    return phase_means[np.arange(detrended.size) % frequency]


def moving_average_trend(values: np.ndarray, frequency: int) -> np.ndarray:
    """Centered moving average of width f, the 2 x f average for even f."""
    if frequency % 2:
        weights = np.full(frequency, 1.0 / frequency)
    else:
        weights = np.r_[0.5, np.ones(frequency - 1), 0.5] / frequency
    half = weights.size // 2
    trend = np.full(values.size, np.nan)
    trend[half:values.size - half] = np.convolve(values, weights, mode="valid")
    return trend


def classical_decompose(series: TimeSeries) -> Decomposition:
    _check_seasonal_input(series, "Classical decomposition")
    y = series.values
    trend = moving_average_trend(y, series.frequency)
    seasonal = _periodic_seasonal(y - trend, series.frequency)
    return Decomposition(
        observed=y.copy(),
        trend=trend,
        seasonal=seasonal,
        remainder=y - trend - seasonal,
        method=DecompositionMethod.CLASSICAL,
    )


def default_trend_span(n: int, frequency: int) -> float:
    """Heuristic: one and a half periods, at least ten points, at most everything."""
    return min(1.0, max(1.5 * frequency / n, MIN_TREND_NEIGHBOURS / n))


def stl_periodic(
    series: TimeSeries,
    trend_span: Optional[float] = None,
    inner_iterations: int = DEFAULT_INNER_ITERATIONS,
) -> Decomposition:
    """
    Seasonal-trend decomposition with a periodic seasonal window: the seasonal
    component is the centered cycle-subseries mean of the detrended series and the
    trend a local-linear loess of the deseasonalized series. No robustness pass.
    """
    _check_seasonal_input(series, "STL decomposition")
    y = series.values
    n, f = y.size, series.frequency
    span = default_trend_span(n, f) if trend_span is None else trend_span
    times = np.arange(n, dtype=float)

    trend = np.zeros(n)
    seasonal = np.zeros(n)
    for _ in range(max(1, inner_iterations)):
        seasonal = _periodic_seasonal(y - trend, f)
        trend = loess_smooth(times, y - seasonal, span=span, degree=1)

    logger.debug(f"STL finished: n={n}, f={f}, span={span:.4f}, iterations={inner_iterations}")
    return Decomposition(
        observed=y.copy(),
        trend=trend,
        seasonal=seasonal,
        remainder=y - trend - seasonal,
        method=DecompositionMethod.STL_PERIODIC,
    )
