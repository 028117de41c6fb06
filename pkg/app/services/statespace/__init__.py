from app.services.statespace.arima import ArOrderSelection, impute_kalman_arima, select_model
from app.services.statespace.kalman import KalmanOutput, kalman_filter, kalman_smooth
from app.services.statespace.model import StateSpaceModel
from app.services.statespace.structural import (
    StructuralVariances,
    build_bsm,
    fit_bsm,
    impute_kalman_struct,
    structural_variances,
)

__all__ = [
    "ArOrderSelection",
    "KalmanOutput",
    "StateSpaceModel",
    "StructuralVariances",
    "build_bsm",
    "fit_bsm",
    "impute_kalman_arima",
    "impute_kalman_struct",
    "kalman_filter",
    "kalman_smooth",
    "select_model",
    "structural_variances",
]
