from app.services.benchmark.plotting import emit_strip_plot, plot_points, points_path
from app.services.benchmark.records import RESULT_COLUMNS, RunRecord
from app.services.benchmark.runner import ExperimentConfig, run_benchmark, run_cell
from app.services.benchmark.summary import summarize_records
from app.services.benchmark.synthetic import (
    ARCHETYPES,
    SyntheticSpec,
    archetype_datasets,
    generate_synthetic,
)

__all__ = [
    "ARCHETYPES",
    "ExperimentConfig",
    "RESULT_COLUMNS",
    "RunRecord",
    "SyntheticSpec",
    "archetype_datasets",
    "emit_strip_plot",
    "generate_synthetic",
    "plot_points",
    "points_path",
    "run_benchmark",
    "run_cell",
    "summarize_records",
]
