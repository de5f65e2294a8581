from .config import DEFAULT_ESTIMATORS, DEFAULT_N_GRID, ExperimentConfig
from .experiment import (CSV_HEADER, ExperimentResult, ResultRow, TrialTask,
                         nmse, run_experiment, run_trial, target_weight,
                         trial_seed)
from .oracle import (OneStepDraws, OracleGrid, beta_grid, draw_one_step,
                     oracle_beta, oracle_beta_grid)
from .selftest import (CheckResult, check_lemma_moments,
                       check_mse_at_optimum, check_mse_convexity,
                       check_oracle_equivalence, run_selftest)

__all__ = [
    "CSV_HEADER",
    "CheckResult",
    "DEFAULT_ESTIMATORS",
    "DEFAULT_N_GRID",
    "ExperimentConfig",
    "ExperimentResult",
    "OneStepDraws",
    "OracleGrid",
    "ResultRow",
    "TrialTask",
    "beta_grid",
    "check_lemma_moments",
    "check_mse_at_optimum",
    "check_mse_convexity",
    "check_oracle_equivalence",
    "draw_one_step",
    "nmse",
    "oracle_beta",
    "oracle_beta_grid",
    "run_experiment",
    "run_selftest",
    "target_weight",
    "trial_seed",
]
