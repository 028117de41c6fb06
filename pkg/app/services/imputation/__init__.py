from app.services.imputation.lagged import impute_lagged_regression
from app.services.imputation.outcome import ImputationOutcome
from app.services.imputation.seasonal import impute_seasonal_interp
from app.services.imputation.simple import impute_linear, impute_locf, impute_mean, impute_nocb, linear_fill

__all__ = [
    "ImputationOutcome",
    "impute_lagged_regression",
    "impute_linear",
    "impute_locf",
    "impute_mean",
    "impute_nocb",
    "impute_seasonal_interp",
    "linear_fill",
]
