from dataclasses import dataclass
from typing import Optional

import numpy as np
from numpy.linalg import LinAlgError
from scipy.optimize import minimize

from app import logger
from app.errors import (
    BaseAppException,
    EmptyPhaseException,
    OptimizationFailedException,
    SeriesTooShortException,
)
from app.services.imputation.outcome import ImputationOutcome, build_outcome, require_observed
from app.services.series import TimeSeries
from app.services.statespace.kalman import kalman_filter, kalman_smooth
from app.services.statespace.model import StateSpaceModel
from app.utils.enums import Algorithm

DIFFUSE_SCALE = 1e7
MAX_EVALUATIONS = 500
SIMPLEX_TOLERANCE = 1e-8
# start values as fractions of the sample variance: level, slope, seasonal, observation
START_FRACTIONS = (0.1, 0.01, 0.1, 0.5)


@dataclass(frozen=True)
class StructuralVariances:
    level: float
    slope: float
    seasonal: float
    observation: float


def bsm_state_count(frequency: int) -> int:
    return frequency + 1 if frequency >= 2 else 2


def build_bsm(
    frequency: int,
    variances: StructuralVariances,
    a0: np.ndarray,
    P0: np.ndarray,
) -> StateSpaceModel:
    """
    Basic structural model with states (level, slope, s_1..s_{f-1}). The level and
    slope follow a local linear trend; the seasonal dummies satisfy
    s_t = -(s_{t-1} + ... + s_{t-f+1}) + noise. For f = 1 only the trend block is kept.
    """
    m = bsm_state_count(frequency)
    T = np.zeros((m, m))
    T[0, 0] = T[0, 1] = T[1, 1] = 1.0
    Z = np.zeros(m)
    Z[0] = 1.0
    Q = np.zeros((m, m))
    Q[0, 0] = variances.level
    Q[1, 1] = variances.slope

    if frequency >= 2:
        T[2, 2:] = -1.0
        T[3:, 2:-1] = np.eye(frequency - 2)
        Z[2] = 1.0
        Q[2, 2] = variances.seasonal

    return StateSpaceModel(T=T, Z=Z, Q=Q, h=variances.observation, a0=a0, P0=P0)


def _check_bsm_input(series: TimeSeries) -> None:
    require_observed(series)
    n, f = len(series), series.frequency
    if f >= 2:
        if n < 2 * f:
            raise SeriesTooShortException(f"A seasonal structural model needs n >= {2 * f}, got {n}.")
        observed_phases = np.unique(series.phases[series.observed_mask])
        if observed_phases.size < f:
            empty = sorted(set(range(f)) - set(observed_phases.tolist()))
            raise EmptyPhaseException(f"Every seasonal phase needs an observation; phases {empty} are empty.")
    elif n < 4:
        raise SeriesTooShortException(f"A local linear trend model needs n >= 4, got {n}.")


def _floor(series: TimeSeries) -> float:
    return 1e-10 * max(1.0, float(np.mean(series.observed_values)) ** 2)


def _scale(series: TimeSeries) -> float:
    observed = series.observed_values
    variance = float(np.var(observed, ddof=1)) if observed.size > 1 else 0.0
    return max(variance, _floor(series))


def _difference_scale(series: TimeSeries) -> float:
    """Variance of the first differences over pairs of neighbouring observed positions."""
    differences = np.diff(series.values)
    differences = differences[np.isfinite(differences)]
    if differences.size < 2:
        return _scale(series)
    return max(float(np.var(differences, ddof=1)), _floor(series))


def fit_bsm(
    series: TimeSeries,
    max_evaluations: int = MAX_EVALUATIONS,
    tolerance: float = SIMPLEX_TOLERANCE,
    burn_in: Optional[int] = None,
) -> StateSpaceModel:
    """
    Maximum likelihood fit of the basic structural model.

    The variances are optimized on the log scale with Nelder-Mead from two fixed
    starts, fractions of the first-difference variance and of the sample variance;
    the start reaching the higher likelihood wins, so a fixed input always gives
    the same fit. The first ``burn_in`` likelihood terms (default: the number of
    states) are dropped to approximate a diffuse initialization.
    """
    _check_bsm_input(series)
    f = series.frequency
    m = bsm_state_count(f)
    burn_in = m if burn_in is None else burn_in

    variance = _scale(series)
    a0 = np.zeros(m)
    a0[0] = series.observed_values[0]
    P0 = DIFFUSE_SCALE * variance * np.eye(m)
    y = series.values

    def variances_from(log_variances: np.ndarray) -> StructuralVariances:
        values = np.exp(log_variances)
        if f == 1:
            return StructuralVariances(level=values[0], slope=values[1], seasonal=0.0, observation=values[2])
        return StructuralVariances(*values)

    def negative_log_likelihood(log_variances: np.ndarray) -> float:
        try:
            model = build_bsm(f, variances_from(log_variances), a0, P0)
            value = -kalman_filter(model, y, burn_in=burn_in).log_likelihood
        except (BaseAppException, LinAlgError, FloatingPointError, OverflowError):
            return np.inf
        return value if np.isfinite(value) else np.inf

    fractions = np.array(START_FRACTIONS if f >= 2 else (START_FRACTIONS[0], START_FRACTIONS[1], START_FRACTIONS[3]))
    result = None
    for scale in (_difference_scale(series), variance):
        with np.errstate(all="ignore"):
            candidate = minimize(
                negative_log_likelihood,
                np.log(scale * fractions),
                method="Nelder-Mead",
                options={"maxfev": max_evaluations, "xatol": tolerance, "fatol": tolerance},
            )
        if result is None or candidate.fun < result.fun:
            result = candidate
    if not np.isfinite(result.fun):
        raise OptimizationFailedException("The structural model likelihood was not finite at any evaluated point.")

    fitted = variances_from(result.x)
    logger.debug(
        f"BSM fit f={f}: level={fitted.level:.4g} slope={fitted.slope:.4g} seasonal={fitted.seasonal:.4g} "
        f"observation={fitted.observation:.4g} loglik={-result.fun:.6g} evaluations={result.nfev}"
    )
    return build_bsm(f, fitted, a0, P0)


def structural_variances(model: StateSpaceModel) -> StructuralVariances:
    seasonal = model.Q[2, 2] if model.n_states > 2 else 0.0
    return StructuralVariances(
        level=float(model.Q[0, 0]),
        slope=float(model.Q[1, 1]),
        seasonal=float(seasonal),
        observation=model.h,
    )


def impute_kalman_struct(
    series: TimeSeries,
    max_evaluations: int = MAX_EVALUATIONS,
    tolerance: float = SIMPLEX_TOLERANCE,
) -> ImputationOutcome:
    """
    Fill gaps with the smoothed signal of a fitted basic structural model. A
    missing first value is set to the overall mean before fitting.
    """
    require_observed(series)
    if series.is_complete:
        return build_outcome(series, series.values, Algorithm.KALMAN_STRUCT)

    values = series.values.copy()
    if np.isnan(values[0]):
        values[0] = np.nanmean(values)
    patched = series.with_values(values)

    model = fit_bsm(patched, max_evaluations=max_evaluations, tolerance=tolerance)
    smoothed = kalman_smooth(model, patched.values)
    estimates = smoothed.smoothed_means @ model.Z
    estimates[0] = values[0]
    return build_outcome(series, estimates, Algorithm.KALMAN_STRUCT)
