import numpy as np
import pandas as pd

from app.errors import EmptyPhaseException, ValidationException
from app.services.imputation.outcome import ImputationOutcome, build_outcome, require_observed
from app.services.series import TimeSeries
from app.utils.enums import Algorithm, MeanMode


def impute_mean(series: TimeSeries, mode: MeanMode = MeanMode.OVERALL) -> ImputationOutcome:
    """Replace each gap with the overall mean or with the mean of its seasonal phase."""
    require_observed(series)
    mode = MeanMode(mode)
    y = series.values

    if mode is MeanMode.OVERALL:
        return build_outcome(series, np.full(y.size, np.nanmean(y)), Algorithm.MEAN)

    phase_means = series.to_frame().assign(phase=series.phases).groupby("phase")["value"].mean()
    phase_means = phase_means.reindex(range(series.frequency))
    empty = phase_means.index[phase_means.isna()].tolist()
    if empty:
        raise EmptyPhaseException(f"Seasonal mean needs observations in every phase; phases {empty} are empty.")
    return build_outcome(series, phase_means.to_numpy()[series.phases], Algorithm.SEASONAL_MEAN)


def impute_locf(series: TimeSeries) -> ImputationOutcome:
    """
    Last observation carried forward. A missing first value is set to the overall
    mean first, since there is nothing to carry into it.
    """
    require_observed(series)
    values = pd.Series(series.values, copy=True)
    if np.isnan(values.iat[0]):
        values.iat[0] = np.nanmean(series.values)
    return build_outcome(series, values.ffill().to_numpy(), Algorithm.LOCF)


def impute_nocb(series: TimeSeries) -> ImputationOutcome:
    """Next observation carried backward; a missing last value becomes the overall mean."""
    require_observed(series)
    values = pd.Series(series.values, copy=True)
    if np.isnan(values.iat[-1]):
        values.iat[-1] = np.nanmean(series.values)
    return build_outcome(series, values.bfill().to_numpy(), Algorithm.NOCB)


def linear_fill(values: np.ndarray) -> np.ndarray:
    """Straight lines across interior gaps, nearest observed value beyond the ends."""
    observed = ~np.isnan(values)
    if not observed.any():
        raise ValidationException("Linear interpolation needs at least one observed value.")
    positions = np.arange(values.size)
    return np.interp(positions, positions[observed], values[observed])


def impute_linear(series: TimeSeries) -> ImputationOutcome:
    require_observed(series)
    return build_outcome(series, linear_fill(series.values), Algorithm.LINEAR)
