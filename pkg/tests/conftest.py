import numpy as np
import pytest

from enkf_smcs.model import LinearGaussianModel, simulate_observations

LG_TRUTH = np.array([0.7, -0.4])


@pytest.fixture
def linear_problem():
    """Random linear-Gaussian model (n_x=2, n_y=1, T=5) with one data draw."""
    model = LinearGaussianModel.random(np.random.default_rng(0))
    data = simulate_observations(model, LG_TRUTH, np.random.default_rng(1))
    return model, data


def random_spd(rng, d, cond=10.0):
    q, _ = np.linalg.qr(rng.standard_normal((d, d)))
    eig = np.exp(rng.uniform(0.0, np.log(cond), d))
    return (q * eig) @ q.T


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[key])
