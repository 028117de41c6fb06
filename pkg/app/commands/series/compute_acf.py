from typing import Dict

from app.core.commands import WriteCommand
from app.services.datastore import load_csv, write_frame
from app.services.series import acf


class ComputeAcfCommand(WriteCommand):

    def __init__(self, input_path: str, output_path: str, max_lag: int, frequency: int = 1) -> None:
        self.input_path = input_path
        self.output_path = output_path
        self.max_lag = max_lag
        self.frequency = frequency

    def execute(self) -> Dict:
        series = load_csv(self.input_path, self.frequency)
        result = acf(series, self.max_lag)
        write_frame(result.to_frame(), self.output_path)
        return {"significant_lags": result.significant_lags(), "bound": result.significance_bound}
