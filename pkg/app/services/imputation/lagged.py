import numpy as np

from app import logger
from app.errors import SeriesTooShortException
from app.services.imputation.outcome import ImputationOutcome, build_outcome, require_observed
from app.services.series import TimeSeries, create_lags
from app.utils.enums import Algorithm

DEFAULT_LAGS = 10
DEFAULT_MAX_ITERATIONS = 50
DEFAULT_TOLERANCE = 1e-6
RIDGE = 1e-8


def _least_squares_predict(train_x: np.ndarray, train_y: np.ndarray, target_x: np.ndarray) -> np.ndarray:
    """OLS with intercept on centered regressors; the ridge term keeps collinear lags solvable."""
    x_mean = train_x.mean(axis=0)
    y_mean = train_y.mean()
    centered = train_x - x_mean
    gram = centered.T @ centered + RIDGE * np.eye(centered.shape[1])
    beta = np.linalg.solve(gram, centered.T @ (train_y - y_mean))
    return y_mean + (target_x - x_mean) @ beta


def _initial_fill(matrix: np.ndarray, missing: np.ndarray, fallback: float) -> np.ndarray:
    working = matrix.copy()
    for column in range(matrix.shape[1]):
        observed = ~missing[:, column]
        fill = matrix[observed, column].mean() if observed.any() else fallback
        working[missing[:, column], column] = fill
    return working


def impute_lagged_regression(
    series: TimeSeries,
    lags: int = DEFAULT_LAGS,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
    tolerance: float = DEFAULT_TOLERANCE,
) -> ImputationOutcome:
    """
    Iterative regression imputation on the lag matrix of the series.

    Each column with missing cells is regressed on all other columns, using the
    rows where it was observed, and its missing cells are overwritten with the
    predictions. Sweeps repeat until the largest cell change drops below
    ``tolerance`` or ``max_iterations`` is reached. A time index appears in up to
    ``lags + 1`` cells; its imputed value is the mean of those cells.
    """
    n = len(series)
    if n <= lags + 2:
        raise SeriesTooShortException(
            f"Lagged regression with {lags} lags needs more than {lags + 2} observations, got {n}."
        )
    require_observed(series)
    if series.is_complete:
        return build_outcome(series, series.values, Algorithm.LAGGED_REGRESSION)

    lag_matrix = create_lags(series, lags)
    missing = np.isnan(lag_matrix.values)
    working = _initial_fill(lag_matrix.values, missing, float(np.nanmean(series.values)))
    columns = [c for c in range(working.shape[1]) if missing[:, c].any() and (~missing[:, c]).any()]

    iteration = 0
    for iteration in range(1, max_iterations + 1):
        largest_change = 0.0
        for column in columns:
            rows = missing[:, column]
            regressors = np.delete(working, column, axis=1)
            predictions = _least_squares_predict(regressors[~rows], working[~rows, column], regressors[rows])
            largest_change = max(largest_change, float(np.max(np.abs(predictions - working[rows, column]))))
            working[rows, column] = predictions
        if largest_change < tolerance:
            break
    logger.debug(f"Lagged regression stopped after {iteration} sweeps over {len(columns)} columns")

    rows, cols = np.nonzero(missing)
    targets = lag_matrix.lags + rows - cols
    totals = np.zeros(n)
    counts = np.zeros(n)
    np.add.at(totals, targets, working[rows, cols])
    np.add.at(counts, targets, 1.0)

    estimates = np.full(n, np.nan)
    covered = counts > 0
    estimates[covered] = totals[covered] / counts[covered]
    return build_outcome(series, estimates, Algorithm.LAGGED_REGRESSION)
