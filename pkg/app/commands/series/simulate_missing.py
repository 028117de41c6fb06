from typing import Dict

from app import logger
from app.core.commands import WriteCommand
from app.services.datastore import load_csv, write_series_csv
from app.services.missing import create_missing


class SimulateMissingCommand(WriteCommand):
    """
    Amputate a complete CSV series with the MCAR simulator and write the result.
    """

    def __init__(self, input_path: str, output_path: str, frequency: int, rate: float, seed: int) -> None:
        self.input_path = input_path
        self.output_path = output_path
        self.frequency = frequency
        self.rate = rate
        self.seed = seed

    def execute(self) -> Dict:
        self.validate()
        series = load_csv(self.input_path, self.frequency)
        result = create_missing(series, self.rate, self.seed)
        write_series_csv(result.data, self.output_path)
        logger.info(f"Removed {result.n_missing} of {len(series)} values, written to {self.output_path}")
        return {"n": len(series), "n_missing": result.n_missing, "na_indices": list(result.na_indices)}
