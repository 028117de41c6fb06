from typing import Dict, Optional, Sequence

from app.commands.benchmark.run_benchmark import RunBenchmarkCommand
from app.controllers.controller import Controller


class BenchmarkController(Controller):

    def run(
        self,
        out_dir: str,
        dataset_paths: Sequence[str] = (),
        synthetic: bool = False,
        config_path: Optional[str] = None,
        frequency: int = 1,
    ) -> Dict:
        return self.executor.execute_write(
            RunBenchmarkCommand(out_dir, dataset_paths, synthetic, config_path, frequency)
        )
