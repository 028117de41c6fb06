import unittest

import numpy as np

from app.errors import (
    FrequencyTooLowException,
    MissingValuesPresentException,
    NeighborhoodTooSmallException,
    NonIncreasingXException,
    SeriesTooShortException,
)
from app.services.decomposition import classical_decompose, default_trend_span, loess_smooth, stl_periodic
from app.services.series import make_series
from app.utils.enums import DecompositionMethod
from tests.helpers import rms, sinusoid


def assert_additive(test, decomposition, tolerance=1e-9):
    defined = ~np.isnan(decomposition.trend)
    total = decomposition.trend + decomposition.seasonal + decomposition.remainder
    np.testing.assert_allclose(total[defined], decomposition.observed[defined], atol=tolerance, rtol=0)


def assert_periodic(test, seasonal, frequency, tolerance=1e-9):
    np.testing.assert_allclose(seasonal[frequency:], seasonal[:-frequency], atol=tolerance, rtol=0)
    test.assertAlmostEqual(seasonal[:frequency].sum(), 0.0, delta=tolerance)


class TestClassicalDecompose(unittest.TestCase):

    def test_constant_series(self):
        result = classical_decompose(make_series([5.0] * 16, frequency=4))
        defined = ~np.isnan(result.trend)
        np.testing.assert_allclose(result.trend[defined], 5.0)
        np.testing.assert_allclose(result.seasonal, 0.0, atol=1e-12)
        np.testing.assert_allclose(result.remainder[defined], 0.0, atol=1e-12)
        self.assertEqual(result.method, DecompositionMethod.CLASSICAL)

    def test_ramp_has_no_seasonality(self):
        result = classical_decompose(make_series(np.arange(1.0, 33.0), frequency=4))
        defined = ~np.isnan(result.trend)
        self.assertEqual(int((~defined).sum()), 4)
        np.testing.assert_allclose(result.seasonal, 0.0, atol=1e-9)
        np.testing.assert_allclose(result.remainder[defined], 0.0, atol=1e-9)

    def test_odd_frequency_trend_edges(self):
        result = classical_decompose(make_series(np.arange(21.0), frequency=5))
        self.assertTrue(np.isnan(result.trend[:2]).all())
        self.assertTrue(np.isnan(result.trend[-2:]).all())
        np.testing.assert_allclose(result.trend[2:-2], np.arange(2.0, 19.0))

    def test_recovers_seasonal_component(self):
        values = sinusoid(144, 12, amplitude=1.0, slope=1.0)
        result = classical_decompose(make_series(values, frequency=12))
        truth = np.sin(2 * np.pi * np.arange(1, 145) / 12)
        self.assertLess(np.max(np.abs(result.seasonal - truth)), 0.05)
        assert_additive(self, result)
        assert_periodic(self, result.seasonal, 12)

    def test_preconditions(self):
        with self.assertRaises(FrequencyTooLowException):
            classical_decompose(make_series(np.arange(10.0), frequency=1))
        with self.assertRaises(SeriesTooShortException):
            classical_decompose(make_series(np.arange(7.0), frequency=4))
        with self.assertRaises(MissingValuesPresentException):
            classical_decompose(make_series([1.0, None] * 8, frequency=4))

    def test_frame_columns(self):
        frame = classical_decompose(make_series(np.arange(16.0), frequency=4)).to_frame()
        self.assertEqual(list(frame.columns), ["time", "observed", "trend", "seasonal", "remainder"])


class TestLoess(unittest.TestCase):

    def test_reproduces_a_line(self):
        xs = np.linspace(0.0, 10.0, 40)
        for span in (0.2, 0.5, 1.0):
            np.testing.assert_allclose(loess_smooth(xs, 3 * xs + 1, span, 1), 3 * xs + 1, atol=1e-9)

    def test_reproduces_a_quadratic(self):
        xs = np.linspace(0.0, 5.0, 50)
        np.testing.assert_allclose(loess_smooth(xs, xs ** 2, 0.5, 2), xs ** 2, atol=1e-9)

    def test_irregular_abscissae(self):
        xs = np.cumsum(np.random.default_rng(4).uniform(0.1, 1.0, 60))
        np.testing.assert_allclose(loess_smooth(xs, 2 - 0.5 * xs, 0.3, 1), 2 - 0.5 * xs, atol=1e-9)

    def test_smoothing_reduces_noise(self):
        rng = np.random.default_rng(0)
        xs = np.linspace(0.0, 1.0, 200)
        line = 2 * xs + 1
        ys = line + rng.normal(0.0, 0.1, xs.size)
        fitted = loess_smooth(xs, ys, 0.75, 1)
        self.assertLess(rms(fitted - line), rms(ys - line))

    def test_errors(self):
        with self.assertRaises(NeighborhoodTooSmallException):
            loess_smooth([0.0, 1.0], [1.0, 2.0], 1.0, 1)
        with self.assertRaises(NeighborhoodTooSmallException):
            loess_smooth(np.arange(10.0), np.arange(10.0), 0.1, 2)
        with self.assertRaises(NonIncreasingXException):
            loess_smooth([0.0, 2.0, 1.0, 3.0], [1.0, 2.0, 3.0, 4.0], 1.0, 1)


class TestStlPeriodic(unittest.TestCase):

    def test_constant_series(self):
        result = stl_periodic(make_series([7.0] * 36, frequency=12))
        np.testing.assert_allclose(result.trend, 7.0, atol=1e-9)
        np.testing.assert_allclose(result.seasonal, 0.0, atol=1e-9)
        np.testing.assert_allclose(result.remainder, 0.0, atol=1e-9)
        self.assertEqual(result.method, DecompositionMethod.STL_PERIODIC)

    def test_pure_sinusoid(self):
        values = sinusoid(144, 12)
        result = stl_periodic(make_series(values, frequency=12))
        self.assertLess(rms(result.remainder), 0.01 * rms(values))

    def test_trend_and_season_with_noise(self):
        sigma = 0.05
        noise = np.random.default_rng(2).normal(0.0, sigma, 144)
        values = sinusoid(144, 12, amplitude=1.0, level=10.0, slope=0.02) + noise
        result = stl_periodic(make_series(values, frequency=12))
        self.assertLess(rms(result.remainder), 3 * sigma)
        assert_additive(self, result)
        assert_periodic(self, result.seasonal, 12)

    def test_trend_defined_everywhere(self):
        result = stl_periodic(make_series(sinusoid(48, 4, slope=0.3), frequency=4))
        self.assertFalse(np.isnan(result.trend).any())

    def test_idempotent_on_own_output(self):
        values = sinusoid(96, 12, amplitude=3.0, level=50.0)
        first = stl_periodic(make_series(values, frequency=12))
        second = stl_periodic(make_series(first.trend + first.seasonal, frequency=12))
        self.assertLess(rms(second.remainder), 1e-6 * np.max(np.abs(values)))

    def test_preconditions(self):
        with self.assertRaises(FrequencyTooLowException):
            stl_periodic(make_series(np.arange(10.0)))
        with self.assertRaises(SeriesTooShortException):
            stl_periodic(make_series(np.arange(20.0), frequency=12))

    def test_default_trend_span(self):
        self.assertAlmostEqual(default_trend_span(144, 12), 0.125)
        self.assertAlmostEqual(default_trend_span(40, 2), 0.25)
        self.assertEqual(default_trend_span(8, 4), 1.0)
