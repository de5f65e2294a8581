import numpy as np
import scipy.integrate as si
import scipy.stats as st

from shrinkm import *

from utils import assert_close, assert_raises

T_GRID = np.concatenate([[0.0], np.logspace(-6, 6, 241)])


def all_weights(p: int) -> list:
    return [
        GaussianWeight.of(p),
        HuberWeight.of(p),
        HuberWeight.of(p, 0.95),
        TMleWeight.of(p, 2.5),
        TMleWeight.of(p, 5.0),
        TMleWeight.of(p, 1000.0),
    ]


def test_monotonicity():
    for p in (1, 5, 40):
        for w in all_weights(p):
            u = weight_u(w, T_GRID)
            assert np.all(np.diff(u) <= 0), w
            assert np.all(np.diff(psi(w, T_GRID)) >= 0), w
            assert np.all(u > 0), w


def test_psi_is_t_times_u():
    t = T_GRID[1:]
    for w in all_weights(5):
        assert_close(psi(w, t), t * weight_u(w, t), rtol=1e-12, what=repr(w))


def test_scalar_input():
    w = TMleWeight.of(3, 5.0)
    value = weight_u(w, 2.0)
    assert isinstance(value, float)
    assert_close(value, 8.0 / 7.0)
    assert_close(psi(w, 2.0), 16.0 / 7.0)
    with assert_raises(DomainError):
        weight_u(w, -1.0)
    with assert_raises(DomainError):
        psi(w, [1.0, np.nan])


def test_gaussian_weight():
    w = GaussianWeight.of(4)
    assert np.all(weight_u(w, T_GRID) == 1.0)
    assert w.kind is WeightKind.GAUSSIAN
    assert w.params() == {"kind": "gaussian"}


def chi2_expectation(func, p: int, kink: float) -> float:
    lower, _ = si.quad(lambda t: func(t) * st.chi2.pdf(t, p), 0, kink,
                       epsabs=1e-13, epsrel=1e-12, limit=200)
    upper, _ = si.quad(lambda t: func(t) * st.chi2.pdf(t, p), kink, np.inf,
                       epsabs=1e-13, epsrel=1e-12, limit=200)
    return lower + upper


def test_huber_constants():
    p, q = 10, 0.7
    w = HuberWeight.of(p, q)
    assert_close(w.c_squared, st.chi2.ppf(q, p), rtol=1e-10)
    truncated = chi2_expectation(lambda t: min(t, w.c_squared), p,
                                 w.c_squared)
    assert_close(w.b, truncated / p, rtol=1e-9)
    assert_close(huber_b(p, w.c_squared), w.b)


def test_huber_fisher_consistent():
    for p in (2, 5, 40):
        w = HuberWeight.of(p)
        mean_psi = chi2_expectation(lambda t: float(w.psi(t)), p,
                                    w.c_squared)
        assert_close(mean_psi, p, rtol=1e-8, what=f"E psi at p={p}")


def test_huber_shape():
    w = HuberWeight.of(5)
    below = np.array([0.0, w.c_squared / 2, w.c_squared])
    assert_close(weight_u(w, below), np.full(3, 1 / w.b))
    assert_close(psi(w, 10 * w.c_squared), w.c_squared / w.b)
    assert w.params()["q"] == 0.7
    with assert_raises(DomainError):
        HuberWeight.of(5, 1.0)
    with assert_raises(DomainError):
        huber_b(5, 0.0)


def test_tmle_weight():
    w = TMleWeight.of(4, 6.0)
    assert w.resolved
    assert_close(weight_u(w, 0.0), 10.0 / 6.0)
    assert psi(w, 1e12) < 10.0
    assert w.params() == {"kind": "tmle", "dof": 6.0}
    with assert_raises(DomainError):
        TMleWeight.of(4, 0.0)


def test_tmle_adaptive():
    w = TMleWeight.of(4)
    assert w.dof is adaptive
    assert not w.resolved
    assert w.params()["dof"] == "adaptive"
    with assert_raises(UnresolvedWeightError):
        w.u(np.ones(3))
    with assert_raises(UnresolvedWeightError):
        psi(w, 1.0)
    resolved = w.with_dof(7.0)
    assert resolved.resolved and resolved.dof == 7.0


def test_weight_dimension():
    with assert_raises(DomainError):
        GaussianWeight.of(0)
