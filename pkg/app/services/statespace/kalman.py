from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from app.errors import DegenerateInnovationException
from app.services.statespace.model import StateSpaceModel

LOG_2PI = np.log(2.0 * np.pi)
EXACT_VARIANCE = 1e-12
EXACT_INNOVATION = 1e-8


@dataclass(frozen=True)
class KalmanOutput:
    """
    Filtered moments are conditioned on observations up to and including t,
    predicted moments on observations before t. Smoothed moments are only
    present after ``kalman_smooth``.
    """
    predicted_means: np.ndarray
    predicted_covs: np.ndarray
    filtered_means: np.ndarray
    filtered_covs: np.ndarray
    log_likelihood: float
    n_terms: int
    smoothed_means: Optional[np.ndarray] = None
    smoothed_covs: Optional[np.ndarray] = None


def _as_observations(observations: Iterable[Optional[float]]) -> np.ndarray:
    if isinstance(observations, np.ndarray):
        return np.asarray(observations, dtype=float).reshape(-1)
    return np.array([np.nan if y is None else y for y in observations], dtype=float)


def _symmetrize(matrix: np.ndarray) -> np.ndarray:
    return (matrix + matrix.T) / 2


def kalman_filter(model: StateSpaceModel, observations, burn_in: int = 0) -> KalmanOutput:
    """
    Predict/update recursion. Missing observations (NaN or None) get the predict
    step only and add nothing to the log-likelihood. The first ``burn_in``
    observed terms are left out of the likelihood, which approximates a diffuse
    start.

    An observation whose innovation variance is numerically zero and whose
    innovation is zero carries no information and is skipped; a nonzero
    innovation there, or a negative variance, means the model is invalid.
    """
    y = _as_observations(observations)
    n, m = y.size, model.n_states
    T, Z, Q, h = model.T, model.Z, model.Q, model.h
    identity = np.eye(m)

    observed = y[~np.isnan(y)]
    scale = max(1.0, float(np.abs(observed).max())) if observed.size else 1.0
    variance_floor = EXACT_VARIANCE * scale ** 2
    innovation_floor = EXACT_INNOVATION * scale

    predicted_means = np.empty((n, m))
    predicted_covs = np.empty((n, m, m))
    filtered_means = np.empty((n, m))
    filtered_covs = np.empty((n, m, m))

    a, P = model.a0.copy(), model.P0.copy()
    log_likelihood = 0.0
    seen = terms = 0
    for t in range(n):
        predicted_means[t], predicted_covs[t] = a, P
        if not np.isnan(y[t]):
            v = y[t] - Z @ a
            PZ = P @ Z
            F = Z @ PZ + h
            if F < -variance_floor or (F <= variance_floor and abs(v) > innovation_floor):
                raise DegenerateInnovationException(
                    f"Innovation variance {F:.3g} at t={t} cannot explain innovation {v:.3g}."
                )
            if F > variance_floor:
                K = PZ / F
                a = a + K * v
                # Joseph form keeps P positive semi-definite
                IKZ = identity - np.outer(K, Z)
                P = _symmetrize(IKZ @ P @ IKZ.T + h * np.outer(K, K))
                seen += 1
                if seen > burn_in:
                    log_likelihood -= 0.5 * (LOG_2PI + np.log(F) + v * v / F)
                    terms += 1
        filtered_means[t], filtered_covs[t] = a, P
        a = T @ a
        P = _symmetrize(T @ P @ T.T + Q)

    return KalmanOutput(
        predicted_means=predicted_means,
        predicted_covs=predicted_covs,
        filtered_means=filtered_means,
        filtered_covs=filtered_covs,
        log_likelihood=float(log_likelihood),
        n_terms=terms,
    )


def kalman_smooth(model: StateSpaceModel, observations, burn_in: int = 0) -> KalmanOutput:
    """Fixed-interval (Rauch-Tung-Striebel) smoother over the filter output."""
    filtered = kalman_filter(model, observations, burn_in=burn_in)
    n = filtered.filtered_means.shape[0]
    T = model.T

    smoothed_means = filtered.filtered_means.copy()
    smoothed_covs = filtered.filtered_covs.copy()
    for t in range(n - 2, -1, -1):
        gain = filtered.filtered_covs[t] @ T.T @ np.linalg.pinv(filtered.predicted_covs[t + 1], hermitian=True)
        step = smoothed_means[t + 1] - filtered.predicted_means[t + 1]
        smoothed_means[t] = filtered.filtered_means[t] + gain @ step
        correction = gain @ (smoothed_covs[t + 1] - filtered.predicted_covs[t + 1]) @ gain.T
        smoothed_covs[t] = _symmetrize(filtered.filtered_covs[t] + correction)

    return KalmanOutput(
        predicted_means=filtered.predicted_means,
        predicted_covs=filtered.predicted_covs,
        filtered_means=filtered.filtered_means,
        filtered_covs=filtered.filtered_covs,
        log_likelihood=filtered.log_likelihood,
        n_terms=filtered.n_terms,
        smoothed_means=smoothed_means,
        smoothed_covs=smoothed_covs,
    )
