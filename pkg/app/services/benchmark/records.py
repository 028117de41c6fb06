from dataclasses import asdict, dataclass
from typing import Any, Dict, List

RESULT_COLUMNS = ["dataset", "algorithm", "rate", "seed", "rmse", "mape", "runtime_seconds", "n_missing"]


@dataclass(frozen=True)
class RunRecord:
    """One imputation run of the grid. NaN metrics mark a failed or empty run."""
    dataset: str
    algorithm: str
    rate: float
    seed: int
    rmse: float
    mape: float
    runtime_seconds: float
    n_missing: int

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def records_to_rows(records: List[RunRecord]) -> List[Dict[str, Any]]:
    return [record.to_dict() for record in records]
