import time
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Sequence, Tuple, Union

import numpy as np
from joblib import Parallel, delayed

from app import logger
from app.errors import IncompleteDatasetException, ValidationException
from app.services.benchmark.records import RunRecord
from app.services.imputation.registry import impute, resolve_algorithm
from app.services.metrics import mape, rmse
from app.services.missing import create_missing
from app.services.series import TimeSeries
from app.utils.enums import BENCHMARKED_ALGORITHMS, Algorithm

DEFAULT_RATES = (0.1, 0.3, 0.5, 0.7)
DEFAULT_SEEDS = tuple(range(1, 26))

Datasets = Union[Mapping[str, TimeSeries], Sequence[Tuple[str, TimeSeries]]]


@dataclass(frozen=True)
class ExperimentConfig:
    rates: Tuple[float, ...] = DEFAULT_RATES
    seeds: Tuple[int, ...] = DEFAULT_SEEDS
    algorithms: Tuple[str, ...] = tuple(a.value for a in BENCHMARKED_ALGORITHMS)
    lags: int = 10
    n_jobs: int = 1
    lagged_max_iterations: int = 50
    lagged_tolerance: float = 1e-6
    bsm_max_evaluations: int = 500
    bsm_tolerance: float = 1e-8
    stl_inner_iterations: int = 2

    def __post_init__(self):
        rates = tuple(float(rate) for rate in self.rates)
        if not rates or not self.seeds or not self.algorithms:
            raise ValidationException("An experiment needs at least one rate, one seed and one algorithm.")
        if any(not np.isfinite(rate) or rate < 0 for rate in rates):
            raise ValidationException(f"Missing data rates must be nonnegative, got {list(rates)}.")
        if self.lags < 1:
            raise ValidationException(f"lags must be positive, got {self.lags}.")
        object.__setattr__(self, "rates", rates)
        object.__setattr__(self, "seeds", tuple(int(seed) for seed in self.seeds))
        object.__setattr__(self, "algorithms", tuple(resolve_algorithm(a).value for a in self.algorithms))

    @classmethod
    def from_app_config(cls, config: Mapping[str, Any], **overrides) -> "ExperimentConfig":
        values = dict(
            rates=config["MISSING_RATES"],
            seeds=config["RANDOM_SEEDS"],
            algorithms=config["BENCHMARK_ALGORITHMS"],
            lags=config["LAGGED_REGRESSION_LAGS"],
            n_jobs=config["BENCHMARK_N_JOBS"],
            lagged_max_iterations=config["LAGGED_REGRESSION_MAX_ITERATIONS"],
            lagged_tolerance=config["LAGGED_REGRESSION_TOLERANCE"],
            bsm_max_evaluations=config["BSM_MAX_EVALUATIONS"],
            bsm_tolerance=config["BSM_SIMPLEX_TOLERANCE"],
            stl_inner_iterations=config["STL_INNER_ITERATIONS"],
        )
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    def algorithm_options(self, algorithm: Algorithm) -> Dict[str, Any]:
        if algorithm is Algorithm.LAGGED_REGRESSION:
            return {"lags": self.lags, "max_iterations": self.lagged_max_iterations, "tolerance": self.lagged_tolerance}
        if algorithm is Algorithm.KALMAN_STRUCT:
            return {"max_evaluations": self.bsm_max_evaluations, "tolerance": self.bsm_tolerance}
        if algorithm is Algorithm.SEASONAL_INTERP:
            return {"inner_iterations": self.stl_inner_iterations}
        return {}

    @property
    def runs_per_dataset(self) -> int:
        return len(self.rates) * len(self.seeds) * len(self.algorithms)


def _named(datasets: Datasets) -> List[Tuple[str, TimeSeries]]:
    return list(datasets.items()) if isinstance(datasets, Mapping) else [(name, s) for name, s in datasets]


def _metric(function, imputed: TimeSeries, truth: TimeSeries, positions, context: str) -> float:
    try:
        return function(imputed, truth, positions)
    except Exception as e:
        logger.warning(f"{context}: {function.__name__} recorded as NaN ({e})")
        return float("nan")


def run_cell(name: str, truth: TimeSeries, rate: float, seed: int, config: ExperimentConfig) -> List[RunRecord]:
    """Amputate once, then run every configured algorithm on the same gaps."""
    amputation = create_missing(truth, rate, seed)
    positions = amputation.positions
    records = []
    for label in config.algorithms:
        algorithm = Algorithm(label)
        context = f"{name}/{label}/rate={rate}/seed={seed}"
        started = time.perf_counter()
        try:
            outcome = impute(amputation.data, algorithm, **config.algorithm_options(algorithm))
            runtime = time.perf_counter() - started
        except Exception as e:
            runtime = time.perf_counter() - started
            logger.warning(f"{context}: imputation failed, recording NaN metrics ({e})")
            outcome = None

        if outcome is None or positions.size == 0:
            if outcome is not None:
                logger.warning(f"{context}: no values were amputated, metrics are undefined")
            error_rmse = error_mape = float("nan")
        else:
            error_rmse = _metric(rmse, outcome.series, truth, positions, context)
            error_mape = _metric(mape, outcome.series, truth, positions, context)

        records.append(RunRecord(
            dataset=name,
            algorithm=label,
            rate=rate,
            seed=seed,
            rmse=error_rmse,
            mape=error_mape,
            runtime_seconds=runtime,
            n_missing=amputation.n_missing,
        ))
    return records


def run_benchmark(config: ExperimentConfig, datasets: Datasets) -> List[RunRecord]:
    """
    Run the full grid datasets x rates x seeds x algorithms. Cells run through
    joblib and are sorted afterwards, so ``n_jobs`` never changes the content.
    """
    named = _named(datasets)
    for name, series in named:
        if not series.is_complete:
            raise IncompleteDatasetException(
                f"Dataset '{name}' has {series.n_missing} missing values; benchmarks need complete series."
            )

    cells = [(name, series, rate, seed) for name, series in named for rate in config.rates for seed in config.seeds]
    logger.info(
        f"Running {len(cells) * len(config.algorithms)} imputations over {len(named)} datasets "
        f"with n_jobs={config.n_jobs}"
    )
    results = Parallel(n_jobs=config.n_jobs)(
        delayed(run_cell)(name, series, rate, seed, config) for name, series, rate, seed in cells
    )

    dataset_order = {name: i for i, (name, _) in enumerate(named)}
    algorithm_order = {label: i for i, label in enumerate(config.algorithms)}
    records = [record for cell in results for record in cell]
    records.sort(key=lambda r: (dataset_order[r.dataset], algorithm_order[r.algorithm], r.rate, r.seed))
    return records
