import math
import warnings

import numpy as np
import scipy.special as sc
import scipy.stats as st

from shrinkm import *

from utils import assert_close, assert_raises


def test_reg_gamma_against_scipy():
    for a in (0.5, 1.0, 2.5, 20.0, 101.0):
        for x in (1e-3, 0.4, 1.0, 3.7, 19.0, 25.0, 150.0):
            assert_close(reg_lower_gamma(a, x), sc.gammainc(a, x),
                         atol=1e-14, rtol=1e-12, what=f"P({a}, {x})")
            assert_close(reg_upper_gamma(a, x), sc.gammaincc(a, x),
                         atol=1e-300, rtol=1e-11, what=f"Q({a}, {x})")


def test_reg_gamma_edges():
    assert reg_lower_gamma(3.0, 0.0) == 0.0
    assert reg_upper_gamma(3.0, 0.0) == 1.0
    assert reg_lower_gamma(3.0, math.inf) == 1.0
    assert reg_upper_gamma(3.0, math.inf) == 0.0
    assert_close(reg_lower_gamma(1.0, 2.0), 1 - math.exp(-2.0))
    tail = reg_upper_gamma(2.0, 300.0)
    assert 0 < tail < 1e-120


def test_reg_gamma_domain():
    for a, x in ((0.0, 1.0), (-1.0, 1.0), (1.0, -0.5), (1.0, math.nan)):
        with assert_raises(DomainError):
            reg_lower_gamma(a, x)
        with assert_raises(DomainError):
            reg_upper_gamma(a, x)


def test_chi2_cdf():
    assert_close(chi2_cdf(2, 2.0), 1 - math.exp(-1.0))
    for k in (1, 3, 40):
        for x in (0.1, k, 3.0 * k):
            assert_close(chi2_cdf(k, x), st.chi2.cdf(x, k), rtol=1e-12)
            assert_close(ChiSquared.of(k).pdf(x), st.chi2.pdf(x, k),
                         rtol=1e-12)
    with assert_raises(DomainError):
        chi2_cdf(3, -1.0)


def test_chi2_quantile_against_scipy():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        for k in (1, 2, 5, 40, 42, 200):
            for q in (0.01, 0.3, 0.5, 0.7, 0.99, 0.999):
                assert_close(chi2_quantile(k, q), st.chi2.ppf(q, k),
                             rtol=1e-9, what=f"quantile({k}, {q})")


def test_chi2_quantile_known_values():
    assert_close(chi2_quantile(2, 0.5), 2 * math.log(2), rtol=1e-12)
    assert_close(chi2_quantile(1, 0.95), 3.841458820694124, rtol=1e-10)


def test_chi2_invalid():
    for q in (0.0, 1.0, -0.1, 1.5):
        with assert_raises(DomainError):
            chi2_quantile(5, q)
    for k in (0, -3, 2.5, True):
        with assert_raises(DomainError):
            ChiSquared.of(k)


def test_chi2_quantile_round_trip():
    levels = np.linspace(0.01, 0.99, 50)
    worst = 0.0
    for k in range(1, 201):
        dist = ChiSquared.of(k)
        values = [dist.quantile(float(q)) for q in levels]
        assert np.all(np.diff(values) > 0), k
        for q, x in zip(levels, values):
            worst = max(worst, abs(dist.cdf(x) - q))
        assert k - 1 < dist.quantile(0.5) < k, k
    assert worst <= 1e-10, worst


def test_chi2_non_finite_dof():
    for k in (math.nan, math.inf, -math.inf):
        with assert_raises(DomainError, "positive integer"):
            ChiSquared.of(k)
