from typing import List

import pandas as pd

from app.services.benchmark.records import RESULT_COLUMNS, RunRecord, records_to_rows

GROUP_COLUMNS = ["dataset", "algorithm", "rate"]


def summarize_records(records: List[RunRecord]) -> pd.DataFrame:
    """Mean and median of each metric per (dataset, algorithm, rate), in grid order."""
    frame = pd.DataFrame(records_to_rows(records), columns=RESULT_COLUMNS)
    grouped = frame.groupby(GROUP_COLUMNS, sort=False)
    summary = grouped[["rmse", "mape", "runtime_seconds"]].agg(["mean", "median"])
    summary.columns = [f"{metric}_{statistic}" for metric, statistic in summary.columns]
    summary["runs"] = grouped.size()
    summary["failed_runs"] = grouped["rmse"].apply(lambda column: int(column.isna().sum()))
    return summary.reset_index()
