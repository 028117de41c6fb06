import json
import tempfile
from pathlib import Path
from unittest import mock

import numpy as np
import pandas as pd

from app.errors import OptimizationFailedException
from app.services.datastore import load_csv, read_results_csv, write_series_csv
from app.services.series import make_series
from tests.helpers import AppTestCase, sinusoid

BENCH_CONFIG = """
rates: [0.2]
seeds: [1]
algorithms: [mean, linear]
synthetic:
  - {name: small, kind: trend_seasonal, n: 48, frequency: 4}
"""


def last_json(output):
    return json.loads(output.strip().splitlines()[-1])


class CliTestCase(AppTestCase):

    def setUp(self):
        super().setUp()
        self.runner = self.app.test_cli_runner()
        self.tmp = tempfile.TemporaryDirectory()
        self.root = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()
        super().tearDown()

    def series_file(self, values, name="series.csv", frequency=1):
        path = self.root / name
        write_series_csv(make_series(values, frequency=frequency), path)
        return str(path)

    def invoke(self, *args):
        return self.runner.invoke(args=list(args))


class TestSeriesCommands(CliTestCase):

    def test_simulate(self):
        source = self.series_file(np.arange(1.0, 101.0))
        output = str(self.root / "amputed.csv")
        result = self.invoke("simulate", "--input", source, "--rate", "0.3", "--seed", "4", "--output", output)
        self.assertEqual(result.exit_code, 0, result.output)
        summary = last_json(result.output)
        amputed = load_csv(output)
        self.assertEqual(amputed.n_missing, summary["n_missing"])
        self.assertEqual(list(np.flatnonzero(amputed.missing_mask) + 1), summary["na_indices"])

    def test_impute(self):
        source = self.series_file([1.0, None, 3.0, None, 5.0])
        output = str(self.root / "filled.csv")
        result = self.invoke("impute", "--input", source, "--algorithm", "linear", "--output", output)
        self.assertEqual(result.exit_code, 0, result.output)
        np.testing.assert_allclose(load_csv(output).values, [1.0, 2.0, 3.0, 4.0, 5.0])
        self.assertEqual(last_json(result.output)["filled_indices"], [1, 3])

    def test_decompose(self):
        source = self.series_file(sinusoid(24, 4, level=2.0), frequency=4)
        output = str(self.root / "parts.csv")
        result = self.invoke(
            "decompose", "--input", source, "--frequency", "4", "--method", "classical", "--output", output
        )
        self.assertEqual(result.exit_code, 0, result.output)
        frame = pd.read_csv(output)
        self.assertEqual(list(frame.columns), ["time", "observed", "trend", "seasonal", "remainder"])
        self.assertEqual(len(frame), 24)

    def test_acf(self):
        source = self.series_file(sinusoid(40, 8))
        output = str(self.root / "acf.csv")
        result = self.invoke("acf", "--input", source, "--max-lag", "3", "--output", output)
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(len(pd.read_csv(output)), 4)

    def test_usage_error_exit_code(self):
        result = self.invoke("impute", "--input", "x.csv", "--algorithm", "median", "--output", "y.csv")
        self.assertEqual(result.exit_code, 1)
        result = self.invoke("acf", "--input", "x.csv")
        self.assertEqual(result.exit_code, 1)

    def test_simulate_requires_an_output(self):
        source = self.series_file(np.arange(1.0, 31.0))
        result = self.invoke("simulate", "--input", source, "--rate", "0.3", "--seed", "4")
        self.assertEqual(result.exit_code, 1)
        self.assertIn("--output", result.output)

    def test_ragged_input_is_a_data_error(self):
        source = self.root / "ragged.csv"
        source.write_text("time,value\n1,1.0\n2\n3,3.0\n")
        result = self.invoke("impute", "--input", str(source), "--algorithm", "mean",
                             "--output", str(self.root / "out.csv"))
        self.assertEqual(result.exit_code, 2)
        self.assertFalse((self.root / "out.csv").exists())

    def test_data_error_exit_code(self):
        result = self.invoke("impute", "--input", str(self.root / "absent.csv"), "--algorithm", "mean",
                             "--output", str(self.root / "out.csv"))
        self.assertEqual(result.exit_code, 2)
        source = self.series_file([1.0, None, 3.0])
        result = self.invoke("simulate", "--input", source, "--rate", "0.3", "--seed", "1",
                             "--output", str(self.root / "out.csv"))
        self.assertEqual(result.exit_code, 2)

    def test_numeric_error_exit_code(self):
        source = self.series_file([1.0, None, 3.0])
        with mock.patch(
            "app.cli.commands.series_controller.impute",
            side_effect=OptimizationFailedException("no finite likelihood"),
        ):
            result = self.invoke("impute", "--input", source, "--algorithm", "kalman_struct",
                                 "--output", str(self.root / "out.csv"))
        self.assertEqual(result.exit_code, 3)


class TestBenchCommand(CliTestCase):

    def test_bench_with_config(self):
        config = self.root / "experiment.yaml"
        config.write_text(BENCH_CONFIG)
        out_dir = self.root / "bench"
        result = self.invoke("bench", "--config", str(config), "--out-dir", str(out_dir))
        self.assertEqual(result.exit_code, 0, result.output)

        records = read_results_csv(out_dir / "results.csv")
        self.assertEqual([(r.dataset, r.algorithm) for r in records], [("small", "mean"), ("small", "linear")])
        self.assertTrue((out_dir / "summary.csv").is_file())
        self.assertTrue((out_dir / "strip_rmse.svg").is_file())
        self.assertTrue((out_dir / "strip_rmse_points.csv").is_file())
        self.assertTrue((out_dir / "strip_mape.svg").is_file())

    def test_bench_with_csv_dataset(self):
        config = self.root / "experiment.yaml"
        config.write_text("rates: [0.3]\nseeds: [1, 2]\nalgorithms: [locf]\n")
        source = self.series_file(10.0 + np.arange(30.0), name="ramp.csv")
        out_dir = self.root / "bench"
        result = self.invoke("bench", "--datasets", source, "--config", str(config), "--out-dir", str(out_dir))
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual({r.dataset for r in read_results_csv(out_dir / "results.csv")}, {"ramp"})

    def test_bench_errors(self):
        out_dir = str(self.root / "bench")
        self.assertEqual(self.invoke("bench", "--out-dir", out_dir).exit_code, 2)

        bad_yaml = self.root / "bad.yaml"
        bad_yaml.write_text("rates: [0.1\n")
        self.assertEqual(self.invoke("bench", "--config", str(bad_yaml), "--out-dir", out_dir).exit_code, 2)

        unknown = self.root / "unknown.yaml"
        unknown.write_text("algorithms: [median]\nsynthetic:\n  - {name: a, kind: none, n: 30}\n")
        self.assertEqual(self.invoke("bench", "--config", str(unknown), "--out-dir", out_dir).exit_code, 2)

        gappy = self.series_file([1.0, None, 3.0, 4.0], name="gappy.csv")
        self.assertEqual(self.invoke("bench", "--datasets", gappy, "--out-dir", out_dir).exit_code, 2)


class TestMain(CliTestCase):

    def test_exit_codes(self):
        from application import main

        source = self.series_file(sinusoid(40, 8))
        output = str(self.root / "acf.csv")
        self.assertEqual(main(["acf", "--input", source, "--max-lag", "2", "--output", output]), 0)
        self.assertEqual(main(["acf", "--input", source]), 1)
        constant = self.series_file([2.0] * 10, name="constant.csv")
        self.assertEqual(main(["acf", "--input", constant, "--max-lag", "2", "--output", output]), 2)
