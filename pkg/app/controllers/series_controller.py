from typing import Dict, Optional

from app.commands.series.compute_acf import ComputeAcfCommand
from app.commands.series.decompose_series import DecomposeSeriesCommand
from app.commands.series.impute_series import ImputeSeriesCommand
from app.commands.series.simulate_missing import SimulateMissingCommand
from app.controllers.controller import Controller


class SeriesController(Controller):
    """
    Single-series operations: amputation, imputation, decomposition and ACF.
    """
    def simulate(self, input_path: str, output_path: str, frequency: int, rate: float, seed: int) -> Dict:
        return self.executor.execute_write(SimulateMissingCommand(input_path, output_path, frequency, rate, seed))

    def impute(
        self, input_path: str, output_path: str, frequency: int, algorithm: str, lags: Optional[int] = None
    ) -> Dict:
        return self.executor.execute_write(ImputeSeriesCommand(input_path, output_path, frequency, algorithm, lags))

    def decompose(self, input_path: str, output_path: str, frequency: int, method: str) -> Dict:
        return self.executor.execute_write(DecomposeSeriesCommand(input_path, output_path, frequency, method))

    def acf(self, input_path: str, output_path: str, max_lag: int, frequency: int = 1) -> Dict:
        return self.executor.execute_write(ComputeAcfCommand(input_path, output_path, max_lag, frequency))
