from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Union

import numpy as np
import pandas as pd

from app.errors import (
    EmptySeriesException,
    InvalidFrequencyException,
    InvalidValueException,
    MissingValuesPresentException,
)

Number = Union[int, float, Fraction]


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """
    An equi-spaced univariate series. Index i sits at time start + i / frequency.

    Missing observations are stored as NaN in a read-only float array and are
    reported through ``missing_mask``; finite reals are the only observed values.
    """
    values: np.ndarray
    frequency: int = 1
    start: Fraction = field(default=Fraction(1))

    def __post_init__(self):
        values = np.array(self.values, dtype=float, copy=True).reshape(-1)
        if values.size == 0:
            raise EmptySeriesException("A time series needs at least one observation.")
        if np.isinf(values).any():
            raise InvalidValueException("Observations must be finite reals or missing.")
        frequency = self.frequency
        if isinstance(frequency, bool) or int(frequency) != frequency or frequency < 1:
            raise InvalidFrequencyException(f"Frequency must be a positive integer, got {frequency}.")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "frequency", int(frequency))
        object.__setattr__(self, "start", Fraction(self.start))

    def __len__(self) -> int:
        return self.values.size

    @property
    def missing_mask(self) -> np.ndarray:
        return np.isnan(self.values)

    @property
    def observed_mask(self) -> np.ndarray:
        return ~self.missing_mask

    @property
    def n_missing(self) -> int:
        return int(self.missing_mask.sum())

    @property
    def is_complete(self) -> bool:
        return self.n_missing == 0

    @property
    def observed_values(self) -> np.ndarray:
        return self.values[self.observed_mask]

    @property
    def phases(self) -> np.ndarray:
        return np.arange(len(self)) % self.frequency

    def time_index(self) -> np.ndarray:
        return float(self.start) + np.arange(len(self)) / self.frequency

    def require_complete(self, operation: str = "This operation") -> "TimeSeries":
        if not self.is_complete:
            raise MissingValuesPresentException(
                f"{operation} needs a complete series, found {self.n_missing} missing values."
            )
        return self

    def with_values(self, values: Iterable[Optional[float]]) -> "TimeSeries":
        return TimeSeries(np.asarray(values, dtype=float), self.frequency, self.start)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"time": self.time_index(), "value": self.values})


def make_series(
    values: Iterable[Optional[float]],
    frequency: int = 1,
    start: Number = 1,
) -> TimeSeries:
    """
    Build a TimeSeries. ``None`` and NaN both mark a missing observation.

    :param values: observations in time order
    :param frequency: observations per season
    :param start: time of the first observation
    :return: TimeSeries
    """
    if isinstance(values, np.ndarray):
        array = np.array(values, dtype=float)
    else:
        array = np.array([np.nan if v is None else v for v in values], dtype=float)
    return TimeSeries(array, frequency, Fraction(start))
