from app.services.series.analysis import AcfResult, LagMatrix, acf, autocovariance, create_lags
from app.services.series.time_series import TimeSeries, make_series

__all__ = [
    "AcfResult",
    "LagMatrix",
    "TimeSeries",
    "acf",
    "autocovariance",
    "create_lags",
    "make_series",
]
