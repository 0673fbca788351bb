# Constants for dnacc

DEFAULT_CONFIG_PATH = "configs/config.yaml"
DEFAULT_LOGGING_CONFIG_PATH = "configs/logging.yaml"

BUDGET_ENV_VAR = "DNACC_BUDGET"

DEFAULT_BUDGETS = {
    "ball_candidates": 10_000_000,
    "channel_outputs": 1_000_000,
    "search_vertices": 2048,
    "permanent_dimension": 24,
    "greedy_trials": 20_000,
    "construction_rows": 2_000_000,
    "precision_digits": 30,
}

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_DATEFMT = '%Y-%m-%d %H:%M:%S'
