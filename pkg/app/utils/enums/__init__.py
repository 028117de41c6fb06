from enum import Enum


class ListableEnum(Enum):

    @classmethod
    def to_list(cls):
        return list(map(lambda c: c.value, cls))


class MechanismLabel(ListableEnum):
    """
    Missing data mechanisms, with r the missingness indicator:
      MCAR: P(r | Y_observed, Y_missing) = P(r)
      MAR:  P(r | Y_observed, Y_missing) = P(r | Y_observed)
      NMAR: P(r | Y_observed, Y_missing) depends on Y_missing
    Only MCAR can be simulated.
    """
    MCAR = "MCAR"
    MAR = "MAR"
    NMAR = "NMAR"


class DecompositionMethod(ListableEnum):
    CLASSICAL = "classical"
    STL_PERIODIC = "stl_periodic"


class MeanMode(ListableEnum):
    OVERALL = "overall"
    SEASONAL = "seasonal"


class AlgorithmCategory(ListableEnum):
    UNIVARIATE = "univariate"
    UNIVARIATE_TIME_SERIES = "univariate_time_series"
    MULTIVARIATE_ON_LAGS = "multivariate_on_lags"


class Algorithm(ListableEnum):
    MEAN = "mean"
    SEASONAL_MEAN = "seasonal_mean"
    LOCF = "locf"
    NOCB = "nocb"
    LINEAR = "linear"
    SEASONAL_INTERP = "seasonal_interp"
    KALMAN_STRUCT = "kalman_struct"
    KALMAN_ARIMA = "kalman_arima"
    LAGGED_REGRESSION = "lagged_regression"

    @property
    def category(self):
        if self in (Algorithm.MEAN, Algorithm.SEASONAL_MEAN):
            return AlgorithmCategory.UNIVARIATE
        if self is Algorithm.LAGGED_REGRESSION:
            return AlgorithmCategory.MULTIVARIATE_ON_LAGS
        return AlgorithmCategory.UNIVARIATE_TIME_SERIES


BENCHMARKED_ALGORITHMS = (
    Algorithm.MEAN,
    Algorithm.LOCF,
    Algorithm.LINEAR,
    Algorithm.SEASONAL_INTERP,
    Algorithm.KALMAN_STRUCT,
    Algorithm.LAGGED_REGRESSION,
)


class Metric(ListableEnum):
    RMSE = "rmse"
    MAPE = "mape"
    RUNTIME = "runtime"

    @property
    def column(self):
        return "runtime_seconds" if self is Metric.RUNTIME else self.value


class SyntheticKind(ListableEnum):
    NONE = "none"
    TREND = "trend"
    SEASONAL = "seasonal"
    TREND_SEASONAL = "trend_seasonal"

    @property
    def has_trend(self):
        return self in (SyntheticKind.TREND, SyntheticKind.TREND_SEASONAL)

    @property
    def has_seasonality(self):
        return self in (SyntheticKind.SEASONAL, SyntheticKind.TREND_SEASONAL)
