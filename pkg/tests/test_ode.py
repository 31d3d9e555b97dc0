import numpy as np
import pytest

from enkf_smcs import ode
from enkf_smcs.exceptions import NonFiniteState
from enkf_smcs.model import ERK_TRUTH, ERK_X0

LORENZ = np.array([10.0, 28.0, 8.0 / 3.0])  # (alpha, rho, beta)


def test_lorenz_rhs_examples():
    assert np.array_equal(ode.lorenz63_rhs([0, 0, 0], LORENZ), [0, 0, 0])
    s = np.sqrt(72.0)
    assert np.allclose(ode.lorenz63_rhs([s, s, 27.0], LORENZ), 0.0, atol=1e-10)
    assert np.allclose(ode.lorenz63_rhs([1, 1, 1], LORENZ), [0.0, 26.0, 1.0 - 8.0 / 3.0])


def test_erk_zero_state():
    assert np.array_equal(ode.erk_rhs(np.zeros(11), ERK_TRUTH), np.zeros(11))


def test_erk_unit_state_hand_evaluation():
    k = ERK_TRUTH
    v = np.array([k[0] - k[1], k[2] - k[3], k[4], k[5] - k[6], k[7], k[8] - k[9], k[10]])
    assert np.allclose(ode.erk_rates(np.ones(11), k), v)
    assert np.allclose(ode.erk_rhs(np.ones(11), k), ode.ERK_STOICHIOMETRY @ v)


def test_erk_stoichiometry_row_sums():
    s = ode.ERK_STOICHIOMETRY
    assert s.shape == (11, 7)
    assert s[0].sum() == 0 and s[2].sum() == 0


def test_rk4_zero_field_keeps_state():
    x0 = np.array([1.0, -2.0, 3.0])
    assert np.array_equal(ode.integrate_fixed_rk4(lambda y: np.zeros_like(y), x0, 0.5, 3), x0)


def test_rk4_exponential():
    y = ode.integrate_fixed_rk4(lambda y: y, [1.0], 0.1, 1)
    assert abs(y[0] - np.exp(0.1)) < 1e-7


def test_rk4_blowup_and_bad_arguments():
    with pytest.raises(NonFiniteState), np.errstate(over="ignore", invalid="ignore"):
        ode.integrate_fixed_rk4(lambda y: y**2, [1.0], 10.0, 50)
    with pytest.raises(ValueError):
        ode.integrate_fixed_rk4(lambda y: y, [1.0], 0.1, 0)
    with pytest.raises(ValueError):
        ode.integrate_fixed_rk4(lambda y: y, [1.0], 0.0, 1)


def test_compiled_trajectories_match_reference_integrator():
    x0 = np.array([1.0, 1.0, 1.0])
    traj = ode.lorenz63_trajectories(LORENZ[None], x0, 0.1, 20, 5)[0]
    y = x0
    for t in range(5):
        y = ode.integrate_fixed_rk4(lambda s: ode.lorenz63_rhs(s, LORENZ), y, 0.1, 20)
        assert np.allclose(traj[t], y, rtol=1e-12, atol=1e-12)


def test_diverging_rows_are_nan():
    params = np.array([LORENZ, [1e6, 1e6, -1e6]])
    out = ode.lorenz63_trajectories(params, np.ones(3), 0.1, 2, 20)
    assert np.all(np.isfinite(out[0]))
    assert np.isnan(out[1, -1]).all()


def test_rk4_fourth_order_on_lorenz():
    x0 = np.array([1.0, 1.0, 1.0])
    ref = ode.lorenz63_trajectories(LORENZ[None], x0, 0.1, 400, 1)[0, 0]
    errs = [np.linalg.norm(ode.lorenz63_trajectories(LORENZ[None], x0, 0.1, n, 1)[0, 0] - ref)
            for n in (4, 8, 16)]
    for coarse, fine in zip(errs, errs[1:]):
        assert 12.0 <= coarse / fine <= 20.0


def test_lorenz_substeps_resolve_each_interval():
    # one observation interval from each state along the true trajectory
    traj = ode.lorenz63_trajectories(LORENZ[None], np.ones(3), 0.1, 40, 100)[0]
    starts = np.vstack([np.ones(3), traj[:-1]])
    worst = 0.0
    for s in starts:
        a = ode.lorenz63_trajectories(LORENZ[None], s, 0.1, 20, 1)[0, 0]
        b = ode.lorenz63_trajectories(LORENZ[None], s, 0.1, 40, 1)[0, 0]
        worst = max(worst, np.linalg.norm(a - b) / np.linalg.norm(b))
    assert worst < 1e-6


def test_erk_substeps_resolve_trajectory():
    a = ode.erk_trajectories(ERK_TRUTH[None], ERK_X0, 0.001, 4, 50)
    b = ode.erk_trajectories(ERK_TRUTH[None], ERK_X0, 0.001, 8, 50)
    assert np.max(np.abs(a - b) / np.abs(b)) < 1e-6


def test_erk_truth_stays_finite_and_nonnegative():
    states = ode.erk_trajectories(ERK_TRUTH[None], ERK_X0, 0.001, 4, 50)[0]
    assert np.all(np.isfinite(states))
    assert np.all(states >= 0.0)
