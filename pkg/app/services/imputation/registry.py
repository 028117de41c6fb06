from functools import partial
from typing import Callable, Dict, Union

from app.errors import ValidationException
from app.services.imputation.lagged import impute_lagged_regression
from app.services.imputation.outcome import ImputationOutcome
from app.services.imputation.seasonal import impute_seasonal_interp
from app.services.imputation.simple import impute_linear, impute_locf, impute_mean, impute_nocb
from app.services.series import TimeSeries
from app.services.statespace import impute_kalman_arima, impute_kalman_struct
from app.utils.enums import Algorithm, MeanMode

IMPUTERS: Dict[Algorithm, Callable[..., ImputationOutcome]] = {
    Algorithm.MEAN: partial(impute_mean, mode=MeanMode.OVERALL),
    Algorithm.SEASONAL_MEAN: partial(impute_mean, mode=MeanMode.SEASONAL),
    Algorithm.LOCF: impute_locf,
    Algorithm.NOCB: impute_nocb,
    Algorithm.LINEAR: impute_linear,
    Algorithm.SEASONAL_INTERP: impute_seasonal_interp,
    Algorithm.KALMAN_STRUCT: impute_kalman_struct,
    Algorithm.KALMAN_ARIMA: impute_kalman_arima,
    Algorithm.LAGGED_REGRESSION: impute_lagged_regression,
}


def resolve_algorithm(label: Union[str, Algorithm]) -> Algorithm:
    try:
        return Algorithm(label)
    except ValueError:
        raise ValidationException(
            f"Unknown algorithm '{label}'. Choose one of: {', '.join(Algorithm.to_list())}."
        )


def impute(series: TimeSeries, algorithm: Union[str, Algorithm], **options) -> ImputationOutcome:
    """
    Run one imputation algorithm by label.

    :param series: series with missing values
    :param algorithm: Algorithm or its label
    :param options: keyword arguments forwarded to the algorithm
    :return: ImputationOutcome
    """
    algorithm = resolve_algorithm(algorithm)
    outcome = IMPUTERS[algorithm](series, **options)
    if outcome.algorithm is not algorithm:
        outcome = ImputationOutcome(outcome.series, outcome.filled_indices, algorithm)
    return outcome
