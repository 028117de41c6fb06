import json

import click
from flask.cli import with_appcontext

from app.controllers.benchmark_controller import BenchmarkController
from app.controllers.series_controller import SeriesController
from app.decorators import handle_exceptions
from app.utils.enums import Algorithm

USAGE_ERROR_EXIT_CODE = 1

series_controller = SeriesController()
benchmark_controller = BenchmarkController()


class CliCommand(click.Command):
    """Reports bad options and arguments with exit code 1."""

    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as e:
            e.exit_code = USAGE_ERROR_EXIT_CODE
            raise


def _echo(result):
    click.echo(json.dumps(result, default=str))


input_option = click.option("--input", "input_path", required=True, type=click.Path(dir_okay=False))
output_option = click.option("--output", "output_path", required=True, type=click.Path(dir_okay=False))
frequency_option = click.option(
    "--frequency", default=1, show_default=True, type=click.IntRange(min=1), help="Observations per season."
)


@click.command(cls=CliCommand)
@input_option
@frequency_option
@click.option("--rate", required=True, type=float, help="Lambda of the exponential gap law.")
@click.option("--seed", required=True, type=int)
@output_option
@with_appcontext
@handle_exceptions
def simulate(input_path, frequency, rate, seed, output_path):
    """Delete values from a complete series (MCAR, exponential gaps)."""
    _echo(series_controller.simulate(input_path, output_path, frequency, rate, seed))


@click.command(cls=CliCommand)
@input_option
@frequency_option
@click.option("--algorithm", required=True, type=click.Choice(Algorithm.to_list()))
@click.option("--lags", type=click.IntRange(min=1), default=None, help="Lags for lagged_regression.")
@output_option
@with_appcontext
@handle_exceptions
def impute(input_path, frequency, algorithm, lags, output_path):
    """Fill the missing values of a series."""
    _echo(series_controller.impute(input_path, output_path, frequency, algorithm, lags))


@click.command(cls=CliCommand)
@input_option
@frequency_option
@click.option("--method", required=True, type=click.Choice(["classical", "stl"]))
@output_option
@with_appcontext
@handle_exceptions
def decompose(input_path, frequency, method, output_path):
    """Split a complete series into trend, seasonal and remainder."""
    _echo(series_controller.decompose(input_path, output_path, frequency, method))


@click.command(cls=CliCommand)
@input_option
@click.option("--max-lag", "max_lag", required=True, type=int)
@output_option
@with_appcontext
@handle_exceptions
def acf(input_path, max_lag, output_path):
    """Sample autocorrelation with the 95% significance bound."""
    _echo(series_controller.acf(input_path, output_path, max_lag))


@click.command(cls=CliCommand)
@click.option("--datasets", default="", help="Comma separated CSV files of complete series.")
@click.option("--synthetic", is_flag=True, default=False, help="Add the four synthetic archetypes.")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None, help="YAML experiment config.")
@click.option("--out-dir", "out_dir", required=True, type=click.Path(file_okay=False))
@frequency_option
@with_appcontext
@handle_exceptions
def bench(datasets, synthetic, config_path, out_dir, frequency):
    """Run the imputation benchmark grid and write results, summary and plots."""
    dataset_paths = [path.strip() for path in datasets.split(",") if path.strip()]
    _echo(benchmark_controller.run(out_dir, dataset_paths, synthetic, config_path, frequency))


def init_cli(app):
    for command in (simulate, impute, decompose, acf, bench):
        app.cli.add_command(command)
