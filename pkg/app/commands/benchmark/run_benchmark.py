from pathlib import Path
from typing import Dict, List, Optional, Sequence

import yaml
from flask import current_app

from app import logger
from app.core.commands import WriteCommand
from app.errors import FileNotFoundException, NoPlottableRecordsException, ParseException, ValidationException
from app.schemas.experiment_schemas import experiment_config_schema
from app.services.benchmark import (
    ExperimentConfig,
    archetype_datasets,
    emit_strip_plot,
    generate_synthetic,
    run_benchmark,
    summarize_records,
)
from app.services.datastore import emit_results_csv, load_csv, write_frame
from app.utils.enums import Metric
from app.utils.formatters import get_timestamp
from app.utils.messages import Error, Info

RESULTS_FILE = "results.csv"
SUMMARY_FILE = "summary.csv"


class RunBenchmarkCommand(WriteCommand):
    """
    Run the experiment grid over CSV datasets and/or synthetic archetypes and
    write results.csv, summary.csv and one strip plot per metric to ``out_dir``.
    """

    def __init__(
        self,
        out_dir: str,
        dataset_paths: Sequence[str] = (),
        synthetic: bool = False,
        config_path: Optional[str] = None,
        frequency: int = 1,
    ) -> None:
        self.out_dir = Path(out_dir)
        self.dataset_paths = [path for path in dataset_paths if path]
        self.synthetic = synthetic
        self.config_path = config_path
        self.frequency = frequency
        self.overrides = {}

    def _load_config_file(self) -> Dict:
        path = Path(self.config_path)
        if not path.is_file():
            raise FileNotFoundException(f"No such config file: {path}")
        try:
            with open(path) as f:
                document = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            line = e.problem_mark.line + 1 if getattr(e, "problem_mark", None) else None
            raise ParseException(f"{path} is not valid YAML: {e}", line=line)
        if not isinstance(document, dict):
            raise ParseException(f"{path} must contain a mapping of experiment settings.")
        return experiment_config_schema.load(document)

    def validate(self) -> bool:
        if self.config_path:
            self.overrides = self._load_config_file()
        if not (self.dataset_paths or self.synthetic or self.overrides.get("synthetic")):
            raise ValidationException(Error.NO_DATASETS["message"])
        return True

    def _datasets(self) -> List:
        datasets = [(Path(path).stem, load_csv(path, self.frequency)) for path in self.dataset_paths]
        configured = self.overrides.get("synthetic")
        if configured:
            datasets += [(name, generate_synthetic(spec)) for name, spec in configured]
        elif self.synthetic:
            datasets += list(archetype_datasets().items())

        names = [name for name, _ in datasets]
        duplicates = sorted({name for name in names if names.count(name) > 1})
        if duplicates:
            raise ValidationException(f"Dataset names must be unique, got duplicates {duplicates}.")
        return datasets

    def execute(self) -> Dict:
        self.validate()
        settings = {key: value for key, value in self.overrides.items() if key != "synthetic"}
        config = ExperimentConfig.from_app_config(current_app.config, **settings)
        datasets = self._datasets()
        logger.info(
            f"Benchmark started at {get_timestamp()}: {len(datasets)} datasets, "
            f"{config.runs_per_dataset} runs each"
        )

        records = run_benchmark(config, datasets)

        results_path = self.out_dir / RESULTS_FILE
        emit_results_csv(records, results_path)
        write_frame(summarize_records(records), self.out_dir / SUMMARY_FILE)

        plots = []
        for metric in Metric:
            path = self.out_dir / f"strip_{metric.value}.svg"
            try:
                emit_strip_plot(records, metric, path, jitter_seed=current_app.config["PLOT_JITTER_SEED"])
                plots.append(str(path))
            except NoPlottableRecordsException as e:
                logger.warning(f"Skipping {metric.value} plot: {e.get_message()}")

        logger.info(f"{Info.BENCHMARK_FINISHED['message']}: {len(records)} records in {self.out_dir}")
        return {
            "records": len(records),
            "datasets": [name for name, _ in datasets],
            "results": str(results_path),
            "plots": plots,
        }
