from typing import Dict, Optional

from flask import current_app

from app import logger
from app.core.commands import WriteCommand
from app.services.benchmark import ExperimentConfig
from app.services.datastore import load_csv, write_series_csv
from app.services.imputation.registry import impute, resolve_algorithm


class ImputeSeriesCommand(WriteCommand):
    """
    Fill the gaps of a CSV series with one algorithm. Algorithm options come from
    the application config; ``lags`` overrides the lagged regression default.
    """

    def __init__(
        self,
        input_path: str,
        output_path: str,
        frequency: int,
        algorithm: str,
        lags: Optional[int] = None,
    ) -> None:
        self.input_path = input_path
        self.output_path = output_path
        self.frequency = frequency
        self.algorithm = algorithm
        self.lags = lags

    def validate(self) -> bool:
        self.algorithm = resolve_algorithm(self.algorithm)
        return True

    def execute(self) -> Dict:
        self.validate()
        options = ExperimentConfig.from_app_config(current_app.config, lags=self.lags).algorithm_options(self.algorithm)

        series = load_csv(self.input_path, self.frequency)
        outcome = impute(series, self.algorithm, **options)
        write_series_csv(outcome.series, self.output_path)

        logger.info(f"{self.algorithm.value} filled {len(outcome.filled_indices)} values")
        return {"algorithm": self.algorithm.value, "filled_indices": list(outcome.filled_indices)}
