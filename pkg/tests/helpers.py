import os
import unittest

import numpy as np

from app import create_app
from app.services.series import make_series

RUN_SLOW_TESTS = bool(os.environ.get("RUN_SLOW_TESTS"))

slow_test = unittest.skipUnless(RUN_SLOW_TESTS, "set RUN_SLOW_TESTS=1 to run")


class AppTestCase(unittest.TestCase):
    """Runs each test inside an application context of the TEST config."""

    def setUp(self):
        self.app = create_app("TEST")
        self.app_context = self.app.app_context()
        self.app_context.push()

    def tearDown(self):
        self.app_context.pop()


def sinusoid(n, frequency, amplitude=1.0, level=0.0, slope=0.0):
    t = np.arange(1, n + 1, dtype=float)
    return level + slope * t + amplitude * np.sin(2 * np.pi * t / frequency)


def with_gaps(values, positions, frequency=1):
    values = np.array(values, dtype=float)
    values[list(positions)] = np.nan
    return make_series(values, frequency=frequency)


def rms(values):
    return float(np.sqrt(np.mean(np.square(values))))
