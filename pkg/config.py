import os

basedir = os.path.abspath(os.path.dirname(__file__))


def _float_list(value):
    return [float(item) for item in value.split(',') if item.strip()]


def _str_list(value):
    return [item.strip() for item in value.split(',') if item.strip()]


class Config:
    # Experiment grid
    MISSING_RATES = _float_list(os.environ.get('MISSING_RATES', '0.1,0.3,0.5,0.7'))
    RANDOM_SEED_COUNT = int(os.environ.get('RANDOM_SEED_COUNT', 25))
    RANDOM_SEEDS = list(range(1, RANDOM_SEED_COUNT + 1))
    BENCHMARK_ALGORITHMS = _str_list(os.environ.get(
        'BENCHMARK_ALGORITHMS',
        'mean,locf,linear,seasonal_interp,kalman_struct,lagged_regression',
    ))
    BENCHMARK_N_JOBS = int(os.environ.get('BENCHMARK_N_JOBS', 1))

    # Lagged regression
    LAGGED_REGRESSION_LAGS = int(os.environ.get('LAGGED_REGRESSION_LAGS', 10))
    LAGGED_REGRESSION_MAX_ITERATIONS = int(os.environ.get('LAGGED_REGRESSION_MAX_ITERATIONS', 50))
    LAGGED_REGRESSION_TOLERANCE = float(os.environ.get('LAGGED_REGRESSION_TOLERANCE', 1e-6))

    # State space fitting
    BSM_MAX_EVALUATIONS = int(os.environ.get('BSM_MAX_EVALUATIONS', 500))
    BSM_SIMPLEX_TOLERANCE = float(os.environ.get('BSM_SIMPLEX_TOLERANCE', 1e-8))

    # Decomposition
    STL_INNER_ITERATIONS = int(os.environ.get('STL_INNER_ITERATIONS', 2))

    # Plots
    PLOT_JITTER_SEED = int(os.environ.get('PLOT_JITTER_SEED', 0))

    # Logging
    RUN_ID = os.environ.get('RUN_ID')

    @staticmethod
    def init_app(app):
        pass


class DevelopmentConfig(Config):
    FLASK_CONFIG = 'DEV'
    TESTING = True
    DEBUG = True


class TestingConfig(Config):
    FLASK_CONFIG = 'TEST'
    TESTING = True
    DEBUG = True


class StagingConfig(Config):
    FLASK_CONFIG = 'STAGING'
    TESTING = False
    DEBUG = False


class ProductionConfig(Config):
    FLASK_CONFIG = 'PROD'
    TESTING = False
    DEBUG = False
    BENCHMARK_N_JOBS = int(os.environ.get('BENCHMARK_N_JOBS', -1))


config = {
    'DEV': DevelopmentConfig,
    'TEST': TestingConfig,
    'STAGING': StagingConfig,
    'PROD': ProductionConfig,
}
