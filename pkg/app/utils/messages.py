class Error:
    COMMAND_FAILED = {"message": "Command failed to complete"}
    SCHEMA_VALIDATION_FAILED = {"message": "Failed to validate experiment configuration"}
    NO_DATASETS = {"message": "Pass --datasets, --synthetic or a config with synthetic datasets"}


class Info:
    BENCHMARK_FINISHED = {"message": "Benchmark finished"}
