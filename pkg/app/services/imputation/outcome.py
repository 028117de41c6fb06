from dataclasses import dataclass
from typing import Tuple

import numpy as np

from app.errors import AllMissingException
from app.services.series import TimeSeries
from app.utils.enums import Algorithm


@dataclass(frozen=True)
class ImputationOutcome:
    series: TimeSeries
    filled_indices: Tuple[int, ...]
    algorithm: Algorithm

    @property
    def values(self) -> np.ndarray:
        return self.series.values


def require_observed(series: TimeSeries, minimum: int = 1) -> None:
    observed = int(series.observed_mask.sum())
    if observed == 0:
        raise AllMissingException("Every observation is missing; nothing to impute from.")
    if observed < minimum:
        raise AllMissingException(f"Imputation needs at least {minimum} observed values, got {observed}.")


def build_outcome(source: TimeSeries, estimates: np.ndarray, algorithm: Algorithm) -> ImputationOutcome:
    """Write ``estimates`` into the missing slots of ``source`` only."""
    missing = source.missing_mask
    values = source.values.copy()
    values[missing] = np.asarray(estimates, dtype=float)[missing]
    return ImputationOutcome(
        series=source.with_values(values),
        filled_indices=tuple(int(i) for i in np.flatnonzero(missing)),
        algorithm=algorithm,
    )
