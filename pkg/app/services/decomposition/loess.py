import math
from typing import Sequence

import numpy as np

from app.errors import NeighborhoodTooSmallException, NonIncreasingXException, ValidationException


def tricube(distances: np.ndarray) -> np.ndarray:
    """Tricube weights for distances already scaled to [0, 1]."""
    return np.clip(1.0 - np.abs(distances) ** 3, 0.0, None) ** 3


def _window_starts(xs: np.ndarray, q: int) -> np.ndarray:
    # xs is sorted, so the q nearest neighbours of every point form a contiguous window
    n = xs.size
    starts = np.empty(n, dtype=int)
    lo = 0
    for i in range(n):
        while lo + q < n and xs[lo + q] - xs[i] < xs[i] - xs[lo]:
            lo += 1
        starts[i] = lo
    return starts


def loess_smooth(
    xs: Sequence[float],
    ys: Sequence[float],
    span: float,
    degree: int = 1,
) -> np.ndarray:
    """
    Locally weighted polynomial regression evaluated at every x.

    Each fit uses the ceil(span * n) nearest neighbours, weighted by the tricube of
    the distance over the largest neighbourhood distance. Global polynomials of
    degree <= ``degree`` are reproduced exactly.

    :param xs: strictly increasing abscissae
    :param ys: responses, same length as xs
    :param span: neighbourhood size as a fraction of n, in (0, 1]
    :param degree: local polynomial degree, 1 or 2
    :return: fitted values
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if degree not in (1, 2):
        raise ValidationException(f"Loess degree must be 1 or 2, got {degree}.")
    if not 0.0 < span <= 1.0:
        raise ValidationException(f"Loess span must lie in (0, 1], got {span}.")
    if xs.size != ys.size:
        raise ValidationException("Loess needs xs and ys of equal length.")
    n = xs.size
    if n < degree + 2:
        raise NeighborhoodTooSmallException(f"Loess of degree {degree} needs at least {degree + 2} points.")
    if np.any(np.diff(xs) <= 0):
        raise NonIncreasingXException("Loess abscissae must be strictly increasing.")

    q = min(n, math.ceil(span * n))
    if q < degree + 2:
        raise NeighborhoodTooSmallException(
            f"Span {span} gives {q} neighbours, degree {degree} needs {degree + 2}."
        )

    fitted = np.empty(n)
    for i, lo in enumerate(_window_starts(xs, q)):
        window_x = xs[lo:lo + q]
        offsets = window_x - xs[i]
        bandwidth = np.abs(offsets).max()
        scaled = offsets / bandwidth
        sqrt_w = np.sqrt(tricube(scaled))
        design = np.vander(scaled, degree + 1, increasing=True)
        coef, *_ = np.linalg.lstsq(design * sqrt_w[:, None], ys[lo:lo + q] * sqrt_w, rcond=None)
        fitted[i] = coef[0]

    return fitted
