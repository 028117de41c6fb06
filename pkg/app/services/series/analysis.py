from dataclasses import dataclass
from typing import List

import numpy as np
import pandas as pd

from app.errors import LagOutOfRangeException, ZeroVarianceException
from app.services.series.time_series import TimeSeries

SIGNIFICANCE_Z = 1.96


@dataclass(frozen=True)
class AcfResult:
    coefficients: np.ndarray
    n: int
    significance_bound: float

    @property
    def lags(self) -> np.ndarray:
        return np.arange(self.coefficients.size)

    def significant_lags(self) -> List[int]:
        return [int(k) for k in self.lags[1:] if abs(self.coefficients[k]) > self.significance_bound]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            "lag": self.lags,
            "coefficient": self.coefficients,
            "bound": self.significance_bound,
        })


@dataclass(frozen=True)
class LagMatrix:
    """Row i holds x = y[lags + i] and lag_j = y[lags + i - j]; NaN marks a missing cell."""
    values: np.ndarray
    lags: int

    @property
    def columns(self) -> List[str]:
        return ["x"] + [f"lag_{j}" for j in range(1, self.lags + 1)]

    @property
    def n_rows(self) -> int:
        return self.values.shape[0]

    def series_index(self, row: int, column: int) -> int:
        return self.lags + row - column

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.values, columns=self.columns)


def autocovariance(series: TimeSeries, max_lag: int) -> np.ndarray:
    """Biased sample autocovariances for lags 0..max_lag (divisor n)."""
    series.require_complete("Autocovariance")
    n = len(series)
    if max_lag < 0 or max_lag >= n:
        raise LagOutOfRangeException(f"max_lag must lie in [0, {n - 1}], got {max_lag}.")
    deviations = series.values - series.values.mean()
    return np.array([deviations[:n - k] @ deviations[k:] for k in range(max_lag + 1)]) / n


def acf(series: TimeSeries, max_lag: int) -> AcfResult:
    """
    Sample autocorrelation with the biased estimator: the lag-k cross product of
    deviations over the full-series sum of squares.
    """
    series.require_complete("ACF")
    n = len(series)
    if max_lag < 1 or max_lag >= n:
        raise LagOutOfRangeException(f"max_lag must lie in [1, {n - 1}], got {max_lag}.")

    gamma = autocovariance(series, max_lag)
    if gamma[0] <= 0.0:
        raise ZeroVarianceException("ACF is undefined for a constant series.")

    coefficients = np.clip(gamma / gamma[0], -1.0, 1.0)
    coefficients[0] = 1.0
    return AcfResult(coefficients=coefficients, n=n, significance_bound=SIGNIFICANCE_Z / np.sqrt(n))


def create_lags(series: TimeSeries, lags: int) -> LagMatrix:
    """
    Recast the series as a matrix with the value and its first ``lags`` lags as
    columns. Missing values propagate into the matrix.
    """
    n = len(series)
    if lags < 1 or lags >= n:
        raise LagOutOfRangeException(f"lags must lie in [1, {n - 1}], got {lags}.")

    y = series.values
    columns = [y[lags - j:n - j] for j in range(lags + 1)]
    return LagMatrix(values=np.column_stack(columns).astype(float), lags=lags)
