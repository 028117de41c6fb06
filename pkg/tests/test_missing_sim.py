import unittest

import numpy as np
from scipy.stats import chisquare

from app.errors import AlreadyMissingException, NegativeRateException
from app.services.missing import create_missing, exponential_gap_indices, make_generator
from app.services.series import make_series
from app.utils.enums import MechanismLabel

RATES = (0.1, 0.3, 0.5, 0.7)


class TestCreateMissing(unittest.TestCase):

    def setUp(self):
        self.series = make_series(np.arange(1.0, 201.0))

    def test_zero_rate_is_pass_through(self):
        result = create_missing(self.series, 0.0, 42)
        self.assertEqual(result.na_indices, ())
        np.testing.assert_array_equal(result.data.values, self.series.values)
        self.assertEqual(result.mechanism, MechanismLabel.MCAR)

    def test_same_seed_same_indices(self):
        first = create_missing(self.series, 0.5, 7)
        second = create_missing(self.series, 0.5, 7)
        self.assertEqual(first.na_indices, second.na_indices)
        self.assertNotEqual(first.na_indices, create_missing(self.series, 0.5, 8).na_indices)

    def test_indices_match_missing_values(self):
        result = create_missing(self.series, 0.7, 3)
        indices = np.asarray(result.na_indices)
        self.assertTrue(np.all(np.diff(indices) > 0))
        self.assertGreaterEqual(indices.min(), 1)
        self.assertLessEqual(indices.max(), len(self.series))
        np.testing.assert_array_equal(np.flatnonzero(result.data.missing_mask), indices - 1)
        np.testing.assert_array_equal(result.positions, indices - 1)
        kept = result.data.observed_mask
        np.testing.assert_array_equal(result.data.values[kept], self.series.values[kept])

    def test_source_series_is_untouched(self):
        create_missing(self.series, 0.7, 3)
        self.assertTrue(self.series.is_complete)

    def test_errors(self):
        with self.assertRaises(AlreadyMissingException):
            create_missing(make_series([1.0, None, 3.0]), 0.1, 1)
        with self.assertRaises(NegativeRateException):
            create_missing(self.series, -0.1, 1)

    def test_missing_fraction_converges(self):
        n = 100_000
        for rate in RATES:
            indices = exponential_gap_indices(n, rate, make_generator(2024))
            self.assertAlmostEqual(indices.size / n, 1 - np.exp(-rate), delta=0.01)

    def test_gaps_are_geometric(self):
        rate = 0.5
        indices = exponential_gap_indices(100_000, rate, make_generator(5))
        gaps = np.diff(np.r_[0, indices])
        p = 1 - np.exp(-rate)
        support = np.arange(1, 8)
        observed = np.array([np.sum(gaps == k) for k in support] + [np.sum(gaps >= support[-1] + 1)])
        probabilities = np.r_[p * (1 - p) ** (support - 1), (1 - p) ** support[-1]]
        _, p_value = chisquare(observed, probabilities * gaps.size)
        self.assertGreater(p_value, 0.001)

    def test_severity_grows_with_rate(self):
        series = make_series(np.ones(1000))
        means = [np.mean([create_missing(series, rate, seed).n_missing for seed in range(1, 26)]) for rate in RATES]
        self.assertEqual(means, sorted(means))

    def test_negative_seeds_are_accepted(self):
        result = create_missing(self.series, 0.3, -5)
        self.assertEqual(result.seed, -5)
