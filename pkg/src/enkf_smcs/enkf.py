"""Stochastic EnKF for static parameters.

Parameters are turned into the state of an artificial dynamical system
``u_t = [x_t, z_t]`` with ``x_t = x_{t-1}`` and ``z_t = G_t(x_t)``; the data
observe ``z_t`` through ``H = [0, I]``.  Besides the standalone filter this
module provides the moment and gain computations that the SMC sampler's
forward kernel is built from.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .exceptions import DegenerateEnsemble
from .gaussmath import cholesky, solve_spd, symmetrize, weighted_moments
from .model import ForwardModel, ObservationRecord, observations_array
from .records import RunRecord, RunResult, summarize
from .streams import ParticleStreams

log = logging.getLogger(__name__)


@dataclass
class AugmentedEnsemble:
    xs: np.ndarray
    zs: np.ndarray

    def __post_init__(self):
        self.xs = np.atleast_2d(np.asarray(self.xs, dtype=float))
        self.zs = np.asarray(self.zs, dtype=float)
        if self.zs.ndim == 1:
            self.zs = self.zs[:, None]
        if self.xs.shape[0] != self.zs.shape[0]:
            raise ValueError("xs and zs must have the same number of rows")

    @property
    def n_x(self) -> int:
        return self.xs.shape[1]

    @property
    def us(self) -> np.ndarray:
        return np.hstack([self.xs, self.zs])


@dataclass
class GainBundle:
    Q: np.ndarray
    Qx: np.ndarray
    mu_tilde: Optional[np.ndarray]
    C_tilde: np.ndarray


def prior_moments(ens: AugmentedEnsemble, weights=None):
    """Mean and covariance of the stacked ``[x, z]`` particles.

    Raises :class:`DegenerateEnsemble` when fewer than two effective
    particles remain.
    """
    m = ens.xs.shape[0]
    if m < 2:
        raise DegenerateEnsemble(f"need at least 2 particles, got {m}")
    mean, cov, ess = weighted_moments(ens.us, weights)
    if ess < 2.0 - 1e-12:
        raise DegenerateEnsemble(f"effective sample size {ess:.3g} < 2")
    return mean, cov


def kalman_gain(C_tilde, R, mu_tilde=None) -> GainBundle:
    """``Q = C H^T (H C H^T + R)^{-1}`` for ``H = [0, I]``.

    ``H C H^T`` is the trailing ``n_y x n_y`` block of ``C`` and ``C H^T`` its
    trailing column block, so ``H`` is never materialized.
    """
    C = symmetrize(C_tilde)
    R = np.atleast_2d(np.asarray(R, dtype=float))
    n_y = R.shape[0]
    n_x = C.shape[0] - n_y
    if n_x < 0:
        raise ValueError("covariance smaller than the observation block")
    innovation = C[n_x:, n_x:] + R
    cross = C[:, n_x:]
    Q = solve_spd(innovation, cross.T).T
    return GainBundle(Q=Q, Qx=Q[:n_x].copy(), mu_tilde=mu_tilde, C_tilde=C)


def enkf_update(
    ens: AugmentedEnsemble,
    gain: GainBundle,
    y,
    R,
    streams: ParticleStreams,
    chol_R=None,
) -> AugmentedEnsemble:
    """Perturbed-observation update ``u + Q (y - (H u - eta))``, ``eta ~ N(0, R)``.

    Each particle draws its own ``eta`` from its stream.
    """
    y = np.atleast_1d(np.asarray(y, dtype=float))
    if chol_R is None:
        chol_R = cholesky(symmetrize(np.atleast_2d(R)))
    eta = streams.standard_normal(y.shape[0]) @ chol_R.T
    innovation = y[None, :] - (ens.zs - eta)
    us = ens.us + innovation @ gain.Q.T
    n_x = ens.n_x
    return AugmentedEnsemble(us[:, :n_x], us[:, n_x:])


def _clean_predictions(z):
    """Replace non-finite rows by the median of the finite ones."""
    bad = ~np.all(np.isfinite(z), axis=1)
    if bad.any():
        if bad.all():
            raise DegenerateEnsemble("every particle's forward model diverged")
        z = z.copy()
        z[bad] = np.median(z[~bad], axis=0)
    return z, bad


def enkf_run(
    model: ForwardModel,
    data: Sequence[ObservationRecord],
    M: int,
    streams: Optional[ParticleStreams] = None,
    seed: int = 0,
    truth=None,
    keep_trace: bool = False,
) -> RunResult:
    """Standalone EnKF over all observation steps.

    Particles whose forward model diverges are frozen: they are excluded
    from the moments and the reported statistics and are not updated.
    """
    if M < 2:
        raise DegenerateEnsemble(f"need at least 2 particles, got {M}", step=1)
    ys = observations_array(data)
    T = ys.shape[0]
    streams = streams or ParticleStreams.from_seed(seed, M)
    xs = model.prior.sample(streams)
    frozen = np.zeros(M, dtype=bool)
    evals = 0
    records = []
    trace = [] if keep_trace else None
    start = time.perf_counter()
    for t in range(1, T + 1):
        z = model.trajectory(xs, t)[:, t - 1, :]
        evals += M
        z, bad = _clean_predictions(z)
        frozen |= bad
        live = ~frozen
        weights = live.astype(float)
        ens = AugmentedEnsemble(xs, z)
        try:
            mu, C = prior_moments(ens, weights)
        except DegenerateEnsemble as exc:
            raise DegenerateEnsemble(str(exc), step=t) from None
        R = model.noise_cov(t)
        gain = kalman_gain(C, R, mu)
        updated = enkf_update(ens, gain, ys[t - 1], R, streams, chol_R=model.noise_chol(t))
        xs = np.where(live[:, None], updated.xs, xs)
        mean, std, bias = summarize(xs, weights, truth)
        records.append(
            RunRecord(t, mean, std, bias, float(live.sum()), False, False, evals,
                      time.perf_counter() - start)
        )
        if keep_trace:
            trace.append({"t": t, "xs": xs.copy(), "frozen": frozen.copy()})
    if frozen.any():
        log.info("EnKF: %d of %d particles frozen after divergence", frozen.sum(), M)
    log_w = np.where(frozen, -np.inf, -np.log(max((~frozen).sum(), 1)))
    return RunResult("enkf", records, xs, log_w, trace=trace)
