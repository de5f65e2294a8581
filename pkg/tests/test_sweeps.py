"""Monte-Carlo sweeps at p=40, 500 trials per sample size.

Slow; select or skip them with `-f sweeps`.
"""
from functools import lru_cache

import numpy as np

from shrinkm import *

N_GRID = (60, 120, 160, 180, 240)
TRIALS = 500
ROBUST = (Method.HUBER, Method.TMLE)
SCM_BASED = (Method.GAUSS, Method.LW)


@lru_cache(maxsize=None)
def sweep(family: str) -> ExperimentResult:
    cfg = ExperimentConfig.of(p=40, rho=0.6, eta=10.0, family=family,
                              n_grid=N_GRID, trials=TRIALS, seed=2024)
    return run_experiment(cfg)


def test_gaussian_estimators_are_close():
    result = sweep("mvn")
    for n in N_GRID:
        errors = [result.row(m, n).nmse_mean for m in Method]
        assert max(errors) / min(errors) <= 1.25, (n, errors)
    for n in N_GRID:
        assert sum(result.row(m, n).failures for m in Method) == 0


def test_lw_beta_close_to_gauss_beta():
    result = sweep("mvn")
    gauss = result.row(Method.GAUSS, 160).beta_mean
    lw = result.row(Method.LW, 160).beta_mean
    assert abs(gauss - lw) <= 0.05, (gauss, lw)


def test_nmse_decreases_with_n():
    result = sweep("mvn")
    for m in Method:
        errors = [result.row(m, n).nmse_mean for n in N_GRID]
        assert np.all(np.diff(errors) < 0), (m, errors)


def test_robust_estimators_win_on_t5():
    result = sweep("t5")
    for n in N_GRID:
        for robust in ROBUST:
            for plain in SCM_BASED:
                a, b = result.row(robust, n), result.row(plain, n)
                gap = b.nmse_mean - a.nmse_mean
                assert gap >= 3 * np.hypot(a.nmse_se, b.nmse_se), (n, a, b)


def test_robust_estimators_shrink_less_on_t5():
    result = sweep("t5")
    for n in N_GRID:
        for robust in ROBUST:
            for plain in SCM_BASED:
                a, b = result.row(robust, n), result.row(plain, n)
                assert a.beta_mean > b.beta_mean, (n, a, b)


def test_scm_breaks_down_on_t3():
    result = sweep("t3")
    for n in N_GRID:
        worst_robust = max(result.row(m, n).nmse_mean for m in ROBUST)
        best_plain = min(result.row(m, n).nmse_mean for m in SCM_BASED)
        assert best_plain >= 2 * worst_robust, (n, best_plain, worst_robust)
