import csv
import math
from fractions import Fraction
from pathlib import Path
from typing import List, Union

import pandas as pd

from app import logger
from app.errors import (
    EmptyFileException,
    FileNotFoundException,
    IoException,
    ParseException,
)
from app.services.benchmark.records import RESULT_COLUMNS, RunRecord
from app.services.series import TimeSeries, make_series

PathLike = Union[str, Path]
MISSING_TOKENS = ("", "NA")
SERIES_COLUMNS = ["time", "value"]


def _format_metric(value: float) -> str:
    return "NaN" if math.isnan(value) else "%.17g" % value


def _parse_value(token: str, line: int) -> float:
    token = token.strip()
    if token in MISSING_TOKENS:
        return math.nan
    try:
        value = float(token)
    except ValueError:
        raise ParseException(f"Line {line}: '{token}' is not a number.", line=line)
    if not math.isfinite(value):
        raise ParseException(f"Line {line}: observations must be finite numbers, found '{token}'.", line=line)
    return value


def _parse_start(token: str) -> Fraction:
    try:
        return Fraction(token.strip())
    except (ValueError, ZeroDivisionError):
        return Fraction(1)


class CsvDatastore:
    """
    Reads and writes the CSV files of the toolkit: series (time,value),
    tabular outputs and benchmark results.
    """

    def __init__(self, float_format: str = "%.17g") -> None:
        self.float_format = float_format

    def _read_frame(self, path: PathLike) -> pd.DataFrame:
        """Every data row must have as many fields as the header; blank lines are errors."""
        path = Path(path)
        if not path.is_file():
            raise FileNotFoundException(f"No such file: {path}")
        try:
            with path.open(newline="") as handle:
                reader = csv.reader(handle, skipinitialspace=True)
                try:
                    header = next(reader, [])
                    if not header:
                        raise EmptyFileException(f"{path} is empty.")
                    rows = []
                    for row in reader:
                        if not row:
                            raise ParseException(f"{path}, line {reader.line_num}: blank line.", line=reader.line_num)
                        if len(row) != len(header):
                            raise ParseException(
                                f"{path}, line {reader.line_num}: expected {len(header)} fields, found {len(row)}.",
                                line=reader.line_num,
                            )
                        rows.append(row)
                except csv.Error as e:
                    raise ParseException(f"{path}, line {reader.line_num}: {e}", line=reader.line_num)
        except UnicodeDecodeError as e:
            raise ParseException(f"{path} is not valid text: {e}")
        except OSError as e:
            raise IoException(f"Could not read {path}: {e}")
        if not rows:
            raise EmptyFileException(f"{path} has a header but no rows.")
        return pd.DataFrame(rows, columns=header, dtype=str)

    def load_series(self, path: PathLike, frequency: int = 1) -> TimeSeries:
        """
        Load a ``time,value`` CSV. Rows are taken as consecutive observations; the
        time column only supplies the start. Empty or ``NA`` values are missing.
        """
        frame = self._read_frame(path)
        frame.columns = [str(column).strip() for column in frame.columns]
        if "value" not in frame.columns:
            raise ParseException(f"{path}: header must contain a 'value' column.", line=1)

        # line 1 is the header
        values = [_parse_value(token, row + 2) for row, token in enumerate(frame["value"])]
        start = _parse_start(frame["time"].iat[0]) if "time" in frame.columns else Fraction(1)
        logger.debug(f"Loaded {len(values)} observations from {path}")
        return make_series(values, frequency=frequency, start=start)

    def _write(self, frame: pd.DataFrame, path: PathLike, **options) -> None:
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            frame.to_csv(path, index=False, **options)
        except OSError as e:
            raise IoException(f"Could not write {path}: {e}")
        logger.debug(f"Wrote {len(frame)} rows to {path}")

    def write_series(self, series: TimeSeries, path: PathLike) -> None:
        self._write(series.to_frame(), path, na_rep="NA")

    def write_frame(self, frame: pd.DataFrame, path: PathLike) -> None:
        self._write(frame, path, na_rep="NA", float_format=self.float_format)

    def write_results(self, records: List[RunRecord], path: PathLike) -> None:
        rows = [
            {
                "dataset": record.dataset,
                "algorithm": record.algorithm,
                "rate": repr(float(record.rate)),
                "seed": int(record.seed),
                "rmse": _format_metric(record.rmse),
                "mape": _format_metric(record.mape),
                "runtime_seconds": _format_metric(record.runtime_seconds),
                "n_missing": int(record.n_missing),
            }
            for record in records
        ]
        self._write(pd.DataFrame(rows, columns=RESULT_COLUMNS), path)

    def read_results(self, path: PathLike) -> List[RunRecord]:
        path = Path(path)
        if not path.is_file():
            raise FileNotFoundException(f"No such file: {path}")
        try:
            frame = pd.read_csv(path, dtype={"dataset": str, "algorithm": str})
        except pd.errors.EmptyDataError:
            raise EmptyFileException(f"{path} is empty.")
        missing = [column for column in RESULT_COLUMNS if column not in frame.columns]
        if missing:
            raise ParseException(f"{path}: missing result columns {missing}.", line=1)
        return [
            RunRecord(
                dataset=row.dataset,
                algorithm=row.algorithm,
                rate=float(row.rate),
                seed=int(row.seed),
                rmse=float(row.rmse),
                mape=float(row.mape),
                runtime_seconds=float(row.runtime_seconds),
                n_missing=int(row.n_missing),
            )
            for row in frame.itertuples(index=False)
        ]


datastore = CsvDatastore()


def load_csv(path: PathLike, frequency: int = 1) -> TimeSeries:
    return datastore.load_series(path, frequency)


def write_series_csv(series: TimeSeries, path: PathLike) -> None:
    datastore.write_series(series, path)


def write_frame(frame: pd.DataFrame, path: PathLike) -> None:
    datastore.write_frame(frame, path)


def emit_results_csv(records: List[RunRecord], path: PathLike) -> None:
    datastore.write_results(records, path)


def read_results_csv(path: PathLike) -> List[RunRecord]:
    return datastore.read_results(path)
