import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate, stats

from enkf_smcs.exceptions import NotPositiveDefinite
from enkf_smcs.gaussmath import (
    GaussianDist,
    chol_logdet,
    cholesky,
    gaussian_logpdf,
    mvn_logpdf_chol,
    solve_spd,
    symmetrize,
    weighted_moments,
)

from conftest import random_spd


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), d=st.integers(1, 12))
def test_cholesky_reconstructs(seed, d):
    a = random_spd(np.random.default_rng(seed), d, cond=1e4)
    chol = cholesky(a)
    assert np.allclose(np.triu(chol, 1), 0.0)
    err = np.linalg.norm(chol @ chol.T - a) / np.linalg.norm(a)
    assert err < 1e-10


def test_cholesky_jitter_on_singular_psd():
    v = np.array([[1.0, 2.0, 3.0]])
    a = v.T @ v  # rank one
    chol, jitter = cholesky(a, return_jitter=True)
    assert jitter > 0.0
    assert jitter <= 1e-6 * np.trace(a) / 3
    assert np.allclose(chol @ chol.T, a + jitter * np.eye(3))


def test_cholesky_zero_matrix_uses_unit_scale():
    chol, jitter = cholesky(np.zeros((2, 2)), return_jitter=True)
    assert jitter == pytest.approx(1e-12)
    assert np.all(np.diag(chol) > 0)


def test_cholesky_rejects_indefinite_and_nonfinite():
    with pytest.raises(NotPositiveDefinite):
        cholesky(np.diag([1.0, -1.0]))
    with pytest.raises(NotPositiveDefinite):
        cholesky(np.array([[np.nan, 0.0], [0.0, 1.0]]))


def test_solve_spd_matches_dense_solve():
    rng = np.random.default_rng(3)
    a = random_spd(rng, 5)
    b = rng.standard_normal((5, 3))
    assert np.allclose(solve_spd(a, b), np.linalg.solve(a, b), atol=1e-12)


def test_symmetrize():
    a = np.array([[1.0, 2.0], [0.0, 1.0]])
    assert np.array_equal(symmetrize(a), [[1.0, 1.0], [1.0, 1.0]])


def test_logpdf_matches_scipy():
    rng = np.random.default_rng(4)
    cov = random_spd(rng, 4)
    mean = rng.standard_normal(4)
    xs = rng.standard_normal((20, 4))
    dist = GaussianDist(mean, cov)
    expected = stats.multivariate_normal(mean, cov).logpdf(xs)
    assert np.allclose(gaussian_logpdf(dist, xs), expected, rtol=0, atol=1e-10)
    assert isinstance(dist.logpdf(xs[0]), float)
    assert chol_logdet(dist.chol) == pytest.approx(np.linalg.slogdet(cov)[1])


def test_logpdf_nonfinite_rows_are_minus_inf():
    chol = np.eye(2)
    out = mvn_logpdf_chol(np.array([[0.0, 0.0], [np.nan, 1.0], [np.inf, 0.0]]), chol)
    assert np.isfinite(out[0])
    assert np.all(out[1:] == -np.inf)


def test_logpdf_normalizes_1d():
    dist = GaussianDist([0.3], [[0.7]])
    total, _ = integrate.quad(lambda x: np.exp(dist.logpdf([x])), -np.inf, np.inf)
    assert abs(total - 1.0) < 1e-6


def test_logpdf_normalizes_2d():
    dist = GaussianDist([0.5, -1.0], [[1.0, 0.6], [0.6, 2.0]])
    total, _ = integrate.dblquad(
        lambda y, x: np.exp(dist.logpdf([x, y])), -12, 13, -14, 12, epsabs=1e-10, epsrel=1e-10
    )
    assert abs(total - 1.0) < 1e-6


def test_sampling_moments():
    dist = GaussianDist([1.0, -2.0], [[2.0, 0.5], [0.5, 1.0]])
    xs = dist.sample(np.random.default_rng(5), size=200_000)
    assert np.allclose(xs.mean(axis=0), dist.mean, atol=0.02)
    assert np.allclose(np.cov(xs.T), dist.cov, atol=0.03)
    one = dist.sample(np.random.default_rng(5))
    assert one.shape == (2,)


def test_gaussian_dist_shape_mismatch():
    with pytest.raises(ValueError):
        GaussianDist([0.0, 1.0], np.eye(3))


def test_weighted_moments_uniform_is_sample_cov():
    xs = np.random.default_rng(6).standard_normal((50, 3))
    mean, cov, ess = weighted_moments(xs)
    assert np.allclose(mean, xs.mean(axis=0))
    assert np.allclose(cov, np.cov(xs.T))
    assert ess == pytest.approx(50)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_weighted_moments_match_numpy_reliability_weights(seed):
    rng = np.random.default_rng(seed)
    xs = rng.standard_normal((40, 2))
    w = rng.random(40) + 0.01
    mean, cov, ess = weighted_moments(xs, w)
    assert np.allclose(mean, np.average(xs, axis=0, weights=w))
    assert np.allclose(cov, np.cov(xs.T, aweights=w, ddof=1))
    wn = w / w.sum()
    assert ess == pytest.approx(1.0 / np.sum(wn**2))


def test_weighted_moments_ignore_zero_weight_rows():
    xs = np.array([[0.0], [2.0], [np.nan]])
    mean, cov, _ = weighted_moments(xs, [0.5, 0.5, 0.0])
    assert mean[0] == pytest.approx(1.0)
    assert cov[0, 0] == pytest.approx(2.0)
