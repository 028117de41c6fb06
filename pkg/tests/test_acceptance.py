"""End-to-end checks of the benchmark behaviour on the synthetic archetypes."""
import time
import unittest

import numpy as np

from app import create_app
from app.errors import EmptyPhaseException
from app.services.benchmark import ExperimentConfig, archetype_datasets, run_benchmark
from app.services.decomposition import classical_decompose, stl_periodic
from app.services.imputation import impute_linear, impute_seasonal_interp
from app.services.imputation.registry import impute
from app.services.missing import create_missing
from app.services.series import make_series
from app.utils.enums import BENCHMARKED_ALGORITHMS, Algorithm
from tests.helpers import slow_test, sinusoid

ALL_SIX = tuple(a.value for a in BENCHMARKED_ALGORITHMS)
CHEAP_ALGORITHMS = ("mean", "seasonal_mean", "locf", "nocb", "linear", "seasonal_interp", "lagged_regression")


def mean_rmse(records):
    by_algorithm = {}
    for record in records:
        by_algorithm.setdefault(record.algorithm, []).append(record.rmse)
    return {algorithm: float(np.mean(values)) for algorithm, values in by_algorithm.items()}


def median_runtime(series, algorithm, repeats):
    runtimes = []
    for _ in range(repeats):
        started = time.perf_counter()
        impute(series, algorithm)
        runtimes.append(time.perf_counter() - started)
    return float(np.median(runtimes))


class TestFrequencyOneEquivalence(unittest.TestCase):

    def test_matches_linear_interpolation(self):
        rng = np.random.default_rng(2024)
        for case in range(100):
            n = int(rng.integers(10, 200))
            truth = make_series(np.cumsum(rng.normal(size=n)))
            amputed = create_missing(truth, float(rng.uniform(0.05, 0.7)), case).data
            if amputed.observed_values.size < 2:
                continue
            difference = impute_seasonal_interp(amputed).values - impute_linear(amputed).values
            self.assertLess(np.abs(difference).max(), 1e-12)


class TestArchetypeOrdering(unittest.TestCase):

    def check_airpass(self, seeds):
        datasets = {"airpass": archetype_datasets()["airpass"]}
        config = ExperimentConfig(rates=(0.3,), seeds=seeds, algorithms=ALL_SIX)
        scores = mean_rmse(run_benchmark(config, datasets))
        for best in ("seasonal_interp", "kalman_struct"):
            for other in ("locf", "linear", "mean"):
                self.assertLess(scores[best], scores[other], f"{best} vs {other}: {scores}")
        self.assertEqual(max(scores, key=scores.get), "mean")

    def test_airpass_ordering_few_seeds(self):
        self.check_airpass(seeds=tuple(range(1, 6)))

    @slow_test
    def test_airpass_ordering(self):
        self.check_airpass(seeds=tuple(range(1, 26)))

    def test_sp_ordering(self):
        datasets = {"sp": archetype_datasets()["sp"]}
        config = ExperimentConfig(rates=(0.3,), seeds=tuple(range(1, 26)), algorithms=("mean", "locf", "linear"))
        scores = mean_rmse(run_benchmark(config, datasets))
        self.assertLess(scores["linear"], scores["locf"])
        self.assertLess(scores["linear"], scores["mean"])
        self.assertEqual(max(scores, key=scores.get), "mean")


class TestArchetypeDecomposition(unittest.TestCase):

    def test_reconstruction(self):
        for name, series in archetype_datasets().items():
            # the non-seasonal archetypes are split with a weekly-like period
            seasonal = series if series.frequency > 1 else make_series(series.values, frequency=7)
            for decomposition in (classical_decompose(seasonal), stl_periodic(seasonal)):
                parts = decomposition.trend + decomposition.seasonal + decomposition.remainder
                defined = ~np.isnan(parts)
                self.assertTrue(defined.any(), name)
                np.testing.assert_allclose(parts[defined], seasonal.values[defined], atol=1e-9)
                f = seasonal.frequency
                self.assertAlmostEqual(decomposition.seasonal[:f].sum(), 0.0, delta=1e-9)


class TestGridScale(unittest.TestCase):

    def setUp(self):
        self.app = create_app("TEST")

    def test_reduced_grid(self):
        config = ExperimentConfig.from_app_config(
            self.app.config, seeds=(1, 2), algorithms=("mean", "locf", "linear")
        )
        records = run_benchmark(config, {"airpass": archetype_datasets()["airpass"]})
        self.assertEqual(len(records), 4 * 2 * 3)

    @slow_test
    def test_default_grid(self):
        config = ExperimentConfig.from_app_config(self.app.config)
        records = run_benchmark(config, {"airpass": archetype_datasets()["airpass"]})
        self.assertEqual(len(records), 600)


class TestRuntimeOrdering(unittest.TestCase):

    def amputed(self, n):
        truth = make_series(sinusoid(n, 12, amplitude=10.0, level=100.0, slope=0.5), frequency=12)
        return create_missing(truth, 0.3, 1).data

    def test_reduced_runtime_ordering(self):
        series = self.amputed(480)
        labels = ("mean", "seasonal_interp", "kalman_struct")
        runtimes = {label: median_runtime(series, label, repeats=1) for label in labels}
        self.assertLess(runtimes["mean"], runtimes["seasonal_interp"])
        self.assertLess(runtimes["seasonal_interp"], runtimes["kalman_struct"])

    @slow_test
    def test_runtime_ordering(self):
        series = self.amputed(10_000)
        runtimes = {label: median_runtime(series, label, repeats=5) for label in ALL_SIX}
        self.assertEqual(min(runtimes, key=runtimes.get), "mean")
        self.assertLess(runtimes["seasonal_interp"], runtimes["kalman_struct"])


class TestImputationProperties(unittest.TestCase):

    def test_randomized_invariants(self):
        rng = np.random.default_rng(77)
        for case in range(500):
            frequency = int(rng.choice([1, 4, 12]))
            n = int(rng.integers(3 * frequency + 20, 3 * frequency + 80))
            truth = make_series(
                sinusoid(n, max(frequency, 2), level=5.0) + rng.normal(0.0, 0.1, n), frequency=frequency
            )
            amputed = create_missing(truth, float(rng.uniform(0.05, 0.5)), case).data
            if amputed.observed_values.size < 2:
                continue
            observed = amputed.observed_mask
            for label in CHEAP_ALGORITHMS:
                algorithm = Algorithm(label)
                options = {"lags": 5} if algorithm is Algorithm.LAGGED_REGRESSION else {}
                try:
                    outcome = impute(amputed, algorithm, **options)
                except EmptyPhaseException:
                    # seasonal_mean needs every phase observed
                    continue
                self.assertTrue(outcome.series.is_complete, label)
                np.testing.assert_array_equal(outcome.series.values[observed], amputed.values[observed])
                again = impute(outcome.series, algorithm, **options)
                np.testing.assert_array_equal(again.series.values, outcome.series.values)

    def test_randomized_invariants_for_kalman_smoothers(self):
        rng = np.random.default_rng(91)
        for case in range(16):
            frequency = int(rng.choice([1, 4, 12]))
            n = int(rng.integers(max(2 * frequency, 20) + 20, max(2 * frequency, 20) + 60))
            truth = make_series(
                sinusoid(n, max(frequency, 2), level=5.0, slope=0.02) + rng.normal(0.0, 0.1, n), frequency=frequency
            )
            amputed = create_missing(truth, float(rng.uniform(0.05, 0.4)), case).data
            if amputed.observed_values.size < 2:
                continue
            observed = amputed.observed_mask
            for algorithm in (Algorithm.KALMAN_STRUCT, Algorithm.KALMAN_ARIMA):
                try:
                    outcome = impute(amputed, algorithm)
                except EmptyPhaseException:
                    continue
                with self.subTest(case=case, algorithm=algorithm.value, frequency=frequency):
                    self.assertTrue(outcome.series.is_complete)
                    np.testing.assert_array_equal(outcome.series.values[observed], amputed.values[observed])
                    again = impute(outcome.series, algorithm)
                    np.testing.assert_array_equal(again.series.values, outcome.series.values)
