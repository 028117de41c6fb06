from typing import Optional

from app.services.decomposition import DEFAULT_INNER_ITERATIONS, stl_periodic
from app.services.imputation.outcome import ImputationOutcome, build_outcome, require_observed
from app.services.imputation.simple import impute_linear, linear_fill
from app.services.series import TimeSeries
from app.utils.enums import Algorithm


def impute_seasonal_interp(
    series: TimeSeries,
    trend_span: Optional[float] = None,
    inner_iterations: int = DEFAULT_INNER_ITERATIONS,
) -> ImputationOutcome:
    """
    Interpolate on the seasonally adjusted series. Non-seasonal series (f = 1) are
    interpolated linearly as they are.

    The seasonal component comes from a periodic STL of the linearly pre-filled
    series; it is removed, the remaining gaps are interpolated linearly and the
    seasonal component is added back at the gaps.
    """
    require_observed(series, minimum=2)
    if series.frequency == 1:
        outcome = impute_linear(series)
        return ImputationOutcome(outcome.series, outcome.filled_indices, Algorithm.SEASONAL_INTERP)
    if series.is_complete:
        return build_outcome(series, series.values, Algorithm.SEASONAL_INTERP)

    prefilled = series.with_values(linear_fill(series.values))
    seasonal = stl_periodic(prefilled, trend_span=trend_span, inner_iterations=inner_iterations).seasonal

    adjusted = linear_fill(series.values - seasonal)
    return build_outcome(series, adjusted + seasonal, Algorithm.SEASONAL_INTERP)
