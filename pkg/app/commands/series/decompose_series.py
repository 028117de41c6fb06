from typing import Dict

from flask import current_app

from app.core.commands import WriteCommand
from app.errors import ValidationException
from app.services.datastore import load_csv, write_frame
from app.services.decomposition import classical_decompose, stl_periodic

METHODS = ("classical", "stl")


class DecomposeSeriesCommand(WriteCommand):

    def __init__(self, input_path: str, output_path: str, frequency: int, method: str) -> None:
        self.input_path = input_path
        self.output_path = output_path
        self.frequency = frequency
        self.method = method

    def validate(self) -> bool:
        if self.method not in METHODS:
            raise ValidationException(f"Unknown method '{self.method}', choose one of {', '.join(METHODS)}.")
        return True

    def execute(self) -> Dict:
        self.validate()
        series = load_csv(self.input_path, self.frequency)
        if self.method == "classical":
            decomposition = classical_decompose(series)
        else:
            decomposition = stl_periodic(series, inner_iterations=current_app.config["STL_INNER_ITERATIONS"])
        write_frame(decomposition.to_frame(series.time_index()), self.output_path)
        return {"method": decomposition.method.value, "n": len(series)}
