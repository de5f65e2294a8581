import math

import numpy as np
import scipy.integrate as si
import scipy.stats as st

from shrinkm import *

from data import Models
from utils import assert_close, assert_raises


def test_family():
    assert Family.of("mvn") == Family.mvn()
    assert Family.of("t5") == Family.t(5)
    assert Family.of("t", 3) == Family.t(3.0)
    assert str(Family.t(5)) == "t5" and str(Family.mvn()) == "mvn"
    assert Family.mvn().kappa == 0.0
    assert_close(Family.t(5).kappa, 2.0)
    assert_close(Family.t(8).kappa, 0.5)
    assert math.isinf(Family.t(3).kappa)
    for name, dof in (("t", None), ("t2", None), ("cauchy", None),
                      ("tx", None), ("t", 1.5)):
        with assert_raises(DomainError):
            Family.of(name, dof)


def test_ar1():
    m = ar1_scatter(4, 0.5, 2.0)
    assert_close(m.entries[0], [2.0, 1.0, 0.5, 0.25])
    assert_close(m.trace, 8.0)
    for p, rho in ((1, 0.3), (5, 0.0), (40, 0.6), (100, 0.9)):
        assert_close(ar1_sphericity(p, rho), ar1_scatter(p, rho, 3.0).sphericity,
                     rtol=1e-12)
    assert_close(ar1_sphericity(40, 0.6), 2.0811, atol=1e-3)
    assert_close(ar1_scatter(6, 0.0, 1.0).entries, np.eye(6))
    for p, rho, eta in ((0, 0.5, 1.0), (3, 1.0, 1.0), (3, -0.1, 1.0),
                        (3, 0.5, 0.0)):
        with assert_raises(DomainError):
            ar1_scatter(p, rho, eta)


def test_radial_distribution_has_mean_p():
    for model in (Models.SMALL_MVN, Models.SMALL_T5, Models.T3):
        assert_close(model.radial().mean(), model.dim, rtol=1e-10)


def test_sampler_is_deterministic():
    a = Models.SMALL_T5.sample(50, 7)
    b = sample(Models.SMALL_T5, 50, 7)
    c = Models.SMALL_T5.sample(50, 8)
    assert np.array_equal(a.rows, b.rows)
    assert not np.array_equal(a.rows, c.rows)
    seq = np.random.SeedSequence(3, spawn_key=(60, 1))
    assert np.array_equal(
        Models.SMALL_MVN.sample(10, seq).rows,
        Models.SMALL_MVN.sample(
            10, np.random.SeedSequence(3, spawn_key=(60, 1))).rows)
    with assert_raises(DomainError):
        Models.SMALL_MVN.sample(0, 1)


def test_sampler_covariance():
    for model, n, tol in ((Models.SMALL_MVN, 20000, 0.05),
                          (Models.SMALL_T5, 40000, 0.1)):
        x = model.sample(n, 11).rows
        s = x.T @ x / n
        lam = model.covariance.entries
        error = np.linalg.norm(s - lam) / np.linalg.norm(lam)
        assert error < tol, (model, error)


def test_sampler_radial_law():
    model = Models.SMALL_T5
    data = model.sample(20000, 12)
    r = model.covariance.quad_forms(data.rows)
    result = st.kstest(r, model.radial().cdf)
    assert result.pvalue > 1e-3, result


def test_solve_sigma_gaussian_weight():
    for model in (Models.SMALL_MVN, Models.SMALL_T5):
        assert_close(solve_sigma(model, GaussianWeight.of(5)), 1.0,
                     rtol=1e-10)


def test_solve_sigma_huber():
    w = HuberWeight.of(5)
    assert_close(solve_sigma(Models.SMALL_MVN, w), 1.0, rtol=1e-8)
    for model in (Models.SMALL_T5, Models.white(5, Family.t(3))):
        sigma = solve_sigma(model, w)
        assert_close(psi_expectation(model, w, sigma), 5.0, atol=1e-6)


def test_solve_sigma_tmle_matches_scatter():
    for dof in (3.0, 5.0, 10.0):
        model = Models.white(5, Family.t(dof))
        sigma = solve_sigma(model, TMleWeight.of(5, dof))
        assert_close(sigma, (dof - 2) / dof, rtol=1e-7)


def test_solve_sigma_errors():
    with assert_raises(DimensionMismatchError):
        solve_sigma(Models.SMALL_MVN, HuberWeight.of(4))
    with assert_raises(UnresolvedWeightError):
        solve_sigma(Models.SMALL_MVN, TMleWeight.of(5))


def test_population_psi1():
    assert_close(population_psi1(Models.SMALL_MVN, GaussianWeight.of(5)), 1.0,
                 rtol=1e-10)
    assert_close(population_psi1(Models.SMALL_T5, GaussianWeight.of(5)),
                 1 + Models.SMALL_T5.family.kappa,
                 rtol=1e-8)
    assert math.isinf(population_psi1(Models.T3, GaussianWeight.of(40)))
    w = HuberWeight.of(5)
    expected, _ = si.quad(lambda t: min(t, w.c_squared)**2 * st.chi2.pdf(t, 5),
                          0, w.c_squared, epsabs=1e-13, epsrel=1e-12)
    expected += w.c_squared**2 * st.chi2.sf(w.c_squared, 5)
    assert_close(population_psi1(Models.SMALL_MVN, w),
                 expected / w.b**2 / 35,
                 rtol=1e-8)


def test_m_functional():
    w = TMleWeight.of(5, 5.0)
    oracle = m_functional(Models.SMALL_T5, w)
    assert_close(oracle.sigma, 0.6, rtol=1e-7)
    assert_close(oracle.m_functional.entries,
                 0.6 * Models.SMALL_T5.covariance.entries,
                 rtol=1e-7)
    assert_close(oracle.gamma, Models.SMALL_T5.covariance.sphericity)
    assert_close(oracle.kappa, 2.0)
    assert 5 / 7 <= oracle.psi1 < 1


def test_one_step_c():
    data = Models.SMALL_MVN.sample(30, 13)
    oracle = m_functional(Models.SMALL_MVN, GaussianWeight.of(5))
    c = one_step_c(data, oracle, GaussianWeight.of(5))
    assert_close(c.entries, scm(data).entries, rtol=1e-12, atol=1e-15)
    shrunk = shrunk_one_step(c, 0.3)
    assert_close(shrunk.trace, c.trace)
    with assert_raises(DimensionMismatchError):
        one_step_c(Models.white(4).sample(30, 1), oracle,
                   GaussianWeight.of(5))


def test_one_step_c_is_unbiased():
    model = Models.SMALL_T5
    w = HuberWeight.of(5)
    oracle = m_functional(model, w)
    seeds = np.random.SeedSequence(14).spawn(2000)
    mean = np.mean(
        [one_step_c(model.sample(20, s), oracle, w).entries for s in seeds],
        axis=0)
    error = np.linalg.norm(mean - oracle.m_functional.entries)
    assert error < 0.05 * np.linalg.norm(oracle.m_functional.entries), error
