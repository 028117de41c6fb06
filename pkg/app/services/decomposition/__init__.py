from app.services.decomposition.decompose import (
    DEFAULT_INNER_ITERATIONS,
    Decomposition,
    classical_decompose,
    default_trend_span,
    moving_average_trend,
    stl_periodic,
)
from app.services.decomposition.loess import loess_smooth

__all__ = [
    "DEFAULT_INNER_ITERATIONS",
    "Decomposition",
    "classical_decompose",
    "default_trend_span",
    "loess_smooth",
    "moving_average_trend",
    "stl_periodic",
]
