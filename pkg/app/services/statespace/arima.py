"""
Kalman imputation with an automatically selected ARIMA(p, d, 0) model.

The order search is deliberately small: d in {0, 1} by comparing the sample
variance of the levels with that of the first differences, and p in 0..5 by AIC
with Yule-Walker estimates. Parameters are estimated on a linearly pre-filled
copy of the series; only the smoothing pass sees the true gaps.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy.linalg import solve_discrete_lyapunov, solve_toeplitz

from app import logger
from app.errors import SeriesTooShortException
from app.services.imputation.outcome import ImputationOutcome, build_outcome, require_observed
from app.services.imputation.simple import linear_fill
from app.services.series import TimeSeries, autocovariance, make_series
from app.services.statespace.kalman import kalman_smooth
from app.services.statespace.model import StateSpaceModel
from app.utils.enums import Algorithm

MIN_LENGTH = 20
MAX_AR_ORDER = 5
DIFFUSE_SCALE = 1e7


@dataclass(frozen=True)
class ArOrderSelection:
    d: int
    p: int
    coefficients: np.ndarray
    innovation_variance: float
    mean: float


def choose_differencing(values: np.ndarray) -> int:
    """1 when differencing does not increase the sample variance, else 0."""
    return int(np.var(np.diff(values)) <= np.var(values))


def yule_walker(gamma: np.ndarray, p: int) -> Tuple[np.ndarray, float]:
    if p == 0:
        return np.empty(0), float(gamma[0])
    coefficients = solve_toeplitz(gamma[:p], gamma[1:p + 1])
    return coefficients, float(gamma[0] - coefficients @ gamma[1:p + 1])


def select_ar_order(centered: np.ndarray, max_order: int = MAX_AR_ORDER) -> Tuple[int, np.ndarray, float]:
    """AR order minimizing N log(sigma^2) + 2p; a constant input gives p = 0 with zero variance."""
    N = centered.size
    max_order = min(max_order, N - 1)
    gamma = autocovariance(make_series(centered), max_order)
    if gamma[0] <= 1e-12 * max(1.0, float(np.abs(centered).max()) ** 2):
        return 0, np.empty(0), 0.0

    best = None
    for p in range(max_order + 1):
        coefficients, sigma2 = yule_walker(gamma, p)
        if sigma2 <= 0:
            continue
        aic = N * np.log(sigma2) + 2 * p
        if best is None or aic < best[0]:
            best = (aic, p, coefficients, sigma2)
    _, p, coefficients, sigma2 = best
    return p, coefficients, sigma2


def select_model(values: np.ndarray) -> ArOrderSelection:
    d = choose_differencing(values)
    working = np.diff(values) if d == 1 else values
    mean = float(working.mean())
    p, coefficients, sigma2 = select_ar_order(working - mean)
    return ArOrderSelection(d=d, p=p, coefficients=coefficients, innovation_variance=sigma2, mean=mean)


def _ar_block(selection: ArOrderSelection) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Companion transition, noise and stationary covariance of the AR part."""
    k = max(selection.p, 1)
    T = np.zeros((k, k))
    T[0, :selection.p] = selection.coefficients
    T[1:, :-1] = np.eye(k - 1)
    Q = np.zeros((k, k))
    Q[0, 0] = selection.innovation_variance
    stationary = solve_discrete_lyapunov(T, Q)
    return T, Q, (stationary + stationary.T) / 2


def ar_state_space(selection: ArOrderSelection, level_variance: float) -> StateSpaceModel:
    """
    d = 0: the state is (z_t, ..., z_{t-p+1}) with z the centered levels.
    d = 1: the drift-adjusted level w_t = y_t - mean * t is carried as an extra
    state, w_t = w_{t-1} + z_t, with a diffuse prior on the starting level.
    """
    T_ar, Q_ar, P_ar = _ar_block(selection)
    k = T_ar.shape[0]
    if selection.d == 0:
        Z = np.zeros(k)
        Z[0] = 1.0
        return StateSpaceModel(T=T_ar, Z=Z, Q=Q_ar, h=0.0, a0=np.zeros(k), P0=P_ar)

    m = k + 1
    T = np.zeros((m, m))
    T[:k, :k] = T_ar
    T[k, 0] = T[k, k] = 1.0
    Q = np.zeros((m, m))
    Q[:k, :k] = Q_ar
    P0 = np.zeros((m, m))
    P0[:k, :k] = P_ar
    P0[k, k] = DIFFUSE_SCALE * max(level_variance, 1.0)
    Z = np.zeros(m)
    Z[0] = Z[k] = 1.0
    return StateSpaceModel(T=T, Z=Z, Q=Q, h=0.0, a0=np.zeros(m), P0=P0)


def impute_kalman_arima(series: TimeSeries) -> ImputationOutcome:
    n = len(series)
    if n < MIN_LENGTH:
        raise SeriesTooShortException(f"ARIMA imputation needs n >= {MIN_LENGTH}, got {n}.")
    require_observed(series, minimum=2)
    if series.is_complete:
        return build_outcome(series, series.values, Algorithm.KALMAN_ARIMA)

    prefilled = linear_fill(series.values)
    selection = select_model(prefilled)
    logger.debug(
        f"ARIMA({selection.p},{selection.d},0) selected, sigma2={selection.innovation_variance:.4g}"
    )

    offset = selection.mean * np.arange(n) if selection.d == 1 else np.full(n, selection.mean)
    model = ar_state_space(selection, float(np.var(prefilled)))
    smoothed = kalman_smooth(model, series.values - offset)
    return build_outcome(series, offset + smoothed.smoothed_means @ model.Z, Algorithm.KALMAN_ARIMA)
