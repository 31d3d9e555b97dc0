import json

import mpmath
import numpy as np
import pytest

from enkf_smcs.exceptions import DomainError, NotPositiveDefinite
from enkf_smcs.model import (
    ERK_OBSERVED,
    ERK_TRUTH,
    BernoulliModel,
    ERKModel,
    LinearGaussianModel,
    Lorenz63Model,
    ObservationRecord,
    PriorSpec,
    bernoulli_solution,
    observations_array,
    read_observations,
    sidecar_path,
    simulate_observations,
    write_observations,
)
from enkf_smcs.streams import ParticleStreams


def test_bernoulli_fixed_points_and_initial_condition():
    assert bernoulli_solution(0.0, 3.0) == 0.0
    assert bernoulli_solution(1.0, 5.0) == pytest.approx(1.0, abs=1e-15)
    xs = np.array([-0.7, 0.2, 4.0])
    assert np.allclose(bernoulli_solution(xs, 0.0), xs)


def test_bernoulli_against_extended_precision():
    x, tau = 1e-4, 15 * 0.3
    mpmath.mp.dps = 50
    xm = mpmath.mpf("1e-4")
    exact = xm / mpmath.sqrt(xm**2 + (1 - xm**2) * mpmath.exp(-2 * mpmath.mpf(tau)))
    assert abs(bernoulli_solution(x, tau) / float(exact) - 1.0) < 1e-12


def test_bernoulli_domain_error():
    with pytest.raises(DomainError):
        bernoulli_solution(2.0, -1.0)


def test_bernoulli_model_trajectory_and_shape_of_data():
    model = BernoulliModel(sigma=0.4)
    g = model.trajectory(np.array([[1e-4]]), 50)[0, :, 0]
    assert g[0] < 1e-3 and abs(g[-1] - 1.0) < 1e-3
    assert np.all(np.diff(g) > 0)
    data = simulate_observations(model, [1e-4], np.random.default_rng(0))
    ys = observations_array(data)[:, 0]
    assert len(data) == 50
    assert abs(ys[:10].mean()) < 0.5 and abs(ys[-10:].mean() - 1.0) < 0.5


def test_evaluate_matches_trajectory():
    model = Lorenz63Model()
    x = np.array([10.0, 8.0 / 3.0, 28.0])
    traj = model.trajectory(x[None], 7)[0]
    assert np.array_equal(model.evaluate(x, 7), traj[6])
    with pytest.raises(ValueError):
        model.evaluate(x, 0)


def test_lorenz_parameter_order():
    # model vector is (alpha, beta, rho)
    model = Lorenz63Model(observed=(0, 1, 2))
    states = model.states(np.array([[10.0, 8.0 / 3.0, 28.0]]), 1)
    other = Lorenz63Model(observed=(0, 1, 2)).states(np.array([[10.0, 28.0, 8.0 / 3.0]]), 1)
    assert not np.allclose(states, other)
    assert model.n_y == 3 and Lorenz63Model(observed=(1,)).n_y == 1


def test_erk_observed_components():
    model = ERKModel()
    assert tuple(model.observed) == ERK_OBSERVED == (0, 3, 6, 9)
    states = model.states(ERK_TRUTH[None], 3)
    assert np.array_equal(model.trajectory(ERK_TRUTH[None], 3), states[:, :, [0, 3, 6, 9]])
    assert model.n_x == 11 and model.n_y == 4


def test_noiseless_simulation_reproduces_model():
    model = BernoulliModel(sigma=1e-15)
    data = simulate_observations(model, [0.3], np.random.default_rng(1))
    expected = model.trajectory(np.array([[0.3]]), 50)[0]
    assert np.allclose(observations_array(data), expected, atol=1e-12)


def test_simulation_checks_truth_dimension():
    with pytest.raises(ValueError):
        simulate_observations(Lorenz63Model(), [1.0, 2.0], np.random.default_rng(0))


def test_observation_file_round_trip(tmp_path):
    model = ERKModel()
    data = simulate_observations(model, ERK_TRUTH, np.random.default_rng(2))
    path = tmp_path / "erk.csv"
    write_observations(path, data, {"seed": 2})
    lines = path.read_text().splitlines()
    assert lines[0] == "t,y1,y2,y3,y4"
    assert len(lines) == 51
    back = read_observations(path)
    assert np.array_equal(observations_array(back), observations_array(data))
    assert json.loads(sidecar_path(path).read_text()) == {"seed": 2}


def test_read_observations_rejects_bad_header(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("a,b\n1,2\n")
    with pytest.raises(ValueError):
        read_observations(path)


def test_prior_uniform_support():
    prior = PriorSpec.uniform([-1.0], [10.0])
    lp = prior.logpdf(np.array([[0.0], [11.0], [-1.0]]))
    assert lp[0] == pytest.approx(-np.log(11.0))
    assert lp[1] == -np.inf and np.isfinite(lp[2])
    xs = prior.sample(ParticleStreams.from_seed(0, 500))
    assert xs.shape == (500, 1) and xs.min() >= -1 and xs.max() <= 10


def test_prior_validation():
    with pytest.raises(ValueError):
        PriorSpec.uniform([1.0], [0.0])
    with pytest.raises(ValueError):
        PriorSpec.uniform([-np.inf], [0.0])
    with pytest.raises(NotPositiveDefinite):
        PriorSpec.gaussian([0.0, 0.0], cov=[[1.0, 2.0], [2.0, 1.0]])
    with pytest.raises(ValueError):
        PriorSpec("beta")


def test_prior_gaussian_sampling():
    prior = PriorSpec.gaussian([6.0, 0.0, 24.0], std=[1.0, 1.0, 1.0])
    xs = prior.sample(ParticleStreams.from_seed(1, 4000))
    assert np.allclose(xs.mean(axis=0), [6, 0, 24], atol=0.1)
    assert prior.to_dict()["kind"] == "gaussian"


def test_linear_gaussian_posteriors_match_batch_solution(linear_problem):
    model, data = linear_problem
    ys = observations_array(data)
    posts = model.exact_posteriors(ys)
    # batch conjugate update with all rows stacked
    for t in range(1, model.T + 1):
        H = model.A[:t].reshape(-1, model.n_x)
        y = ys[:t].reshape(-1)
        prec = np.linalg.inv(model.prior.cov) + H.T @ H / model.noise_cov(1)[0, 0]
        cov = np.linalg.inv(prec)
        mean = cov @ (np.linalg.solve(model.prior.cov, model.prior.mean) + H.T @ y)
        assert np.allclose(posts[t - 1].mean, mean, atol=1e-12)
        assert np.allclose(posts[t - 1].cov, cov, atol=1e-12)


def test_linear_gaussian_requires_gaussian_prior():
    with pytest.raises(ValueError):
        LinearGaussianModel(np.ones((2, 1, 1)), np.eye(1), PriorSpec.uniform([0.0], [1.0]))


def test_loglik_nonfinite_predictions():
    model = BernoulliModel()
    preds = np.array([[[0.1]], [[np.nan]]])
    ll = model.loglik(preds, np.array([[0.0]]))
    assert np.isfinite(ll[0, 0]) and ll[1, 0] == -np.inf


def test_per_step_noise_covariance():
    R = np.stack([np.eye(1) * v for v in (1.0, 4.0)])
    model = LinearGaussianModel(np.ones((2, 1, 1)), R, PriorSpec.gaussian([0.0], std=[1.0]))
    assert model.noise_cov(2)[0, 0] == 4.0
    assert model.noise_chol(2)[0, 0] == 2.0


def test_records_sort_by_step():
    recs = [ObservationRecord(2, np.array([2.0])), ObservationRecord(1, np.array([1.0]))]
    assert observations_array(recs)[:, 0].tolist() == [1.0, 2.0]
