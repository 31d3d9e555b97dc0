"""SMC sampler with an EnKF forward kernel and a Gaussian backward kernel.

At step ``t`` the forward kernel moves every particle by an EnKF-style update

    K_t(. | x) = N(x + Qx (y_t - G_t(x)), Qx R_t Qx^T + delta^2 Sigma_q)

where ``Qx`` is the parameter block of the Kalman gain and ``Sigma_q`` the
covariance of the Gaussian fit ``q_hat = N(xi, Sigma_q)`` to the current
weighted ensemble.  Replacing ``G_t(x)`` by its ensemble average ``ybar``
makes the kernel linear, and conditioning the resulting joint Gaussian
``q_hat(x_{t-1}) K_hat(x_t | x_{t-1})`` on ``x_t`` gives the backward kernel
``L_hat``.

Two drivers are provided: :func:`run_enkf_smcs` computes exact incremental
weights at every step, :func:`run_enkf_smcs_wr` carries cheap approximate
weights and only evaluates exact ones (by telescoping the stored kernel
ratios) when the approximate ESS drops, after ``delta_T_max`` steps, or at
the final step.

All weights are kept in log space.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np
from scipy.special import logsumexp

from .enkf import AugmentedEnsemble, GainBundle, _clean_predictions, kalman_gain, prior_moments
from .exceptions import ConfigError, DegenerateEnsemble
from .gaussmath import (
    GaussianDist,
    cholesky,
    mvn_logpdf_chol,
    solve_spd,
    symmetrize,
    weighted_moments,
)
from .model import ForwardModel, ObservationRecord, observations_array
from .records import RunRecord, RunResult, summarize
from .streams import ParticleStreams

log = logging.getLogger(__name__)

ALGORITHMS = ("enkf_smcs", "enkf_smcs_wr", "enkf_only")
# what to do when the exact-weight ESS falls below 2
DEGENERATE_POLICIES = ("raise", "resample")


@dataclass
class SmcsConfig:
    """Sampler settings.

    ``ess_min_fraction * M`` triggers weight refinement, ``delta_T_max`` caps
    the number of steps between exact-weight evaluations and
    ``ess_resample_fraction * M`` triggers resampling after exact weights.
    ``on_degenerate`` decides what happens when the exact-weight ESS drops
    below 2: ``"raise"`` aborts with :class:`DegenerateEnsemble`,
    ``"resample"`` logs a warning, resamples and carries on.
    """

    M: int
    delta: float = 1e-4
    ess_min_fraction: float = 0.5
    delta_T_max: int = 10
    ess_resample_fraction: float = 0.5
    algorithm: str = "enkf_smcs_wr"
    seed: int = 0
    on_degenerate: str = "raise"

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ConfigError(f"unknown algorithm {self.algorithm!r}", field="algorithm")
        if int(self.M) < 2:
            raise ConfigError("need at least 2 particles", field="M")
        for name in ("ess_min_fraction", "ess_resample_fraction"):
            value = getattr(self, name)
            if not 0.0 < value <= 1.0:
                raise ConfigError("must lie in (0, 1]", field=name)
        if int(self.delta_T_max) < 1:
            raise ConfigError("must be >= 1", field="delta_T_max")
        if self.on_degenerate not in DEGENERATE_POLICIES:
            raise ConfigError(f"must be one of {DEGENERATE_POLICIES}", field="on_degenerate")
        if not self.delta > 0.0:
            raise ConfigError("must be positive", field="delta")
        self.M = int(self.M)
        self.delta_T_max = int(self.delta_T_max)


@dataclass
class ParticleEnsemble:
    """Weighted particles plus the per-particle caches the drivers need.

    ``preds`` holds ``G_1..G_h(x)`` for the current positions and
    ``logpost`` the cumulative log posterior at the last exact-weight step
    (only meaningful at such steps).  ``dead`` marks particles whose forward
    model diverged.
    """

    xs: np.ndarray
    log_weights: np.ndarray
    preds: Optional[np.ndarray] = None
    logpost: Optional[np.ndarray] = None
    dead: Optional[np.ndarray] = None

    def __post_init__(self):
        self.xs = np.atleast_2d(np.asarray(self.xs, dtype=float))
        self.log_weights = np.asarray(self.log_weights, dtype=float)
        if self.dead is None:
            self.dead = np.zeros(self.xs.shape[0], dtype=bool)

    @property
    def M(self) -> int:
        return self.xs.shape[0]

    @property
    def weights(self) -> np.ndarray:
        return np.exp(self.log_weights - logsumexp(self.log_weights))

    def take(self, idx) -> "ParticleEnsemble":
        def pick(a):
            return None if a is None else a[idx].copy()

        return ParticleEnsemble(
            self.xs[idx].copy(),
            self.log_weights[idx].copy(),
            pick(self.preds),
            pick(self.logpost),
            pick(self.dead),
        )


def normalize_log_weights(log_weights) -> np.ndarray:
    """Shift log-weights so that ``logsumexp == 0``; NaN becomes ``-inf``."""
    lw = np.where(np.isnan(log_weights), -np.inf, np.asarray(log_weights, dtype=float))
    total = logsumexp(lw)
    if not np.isfinite(total):
        raise DegenerateEnsemble("all particle weights are zero")
    return lw - total


def ess(log_weights) -> float:
    """Effective sample size ``1 / sum(w^2)`` evaluated in log space."""
    lw = np.asarray(log_weights, dtype=float)
    lw = lw - logsumexp(lw)
    return float(np.exp(-logsumexp(2.0 * lw)))


def systematic_indices(weights, u: float) -> np.ndarray:
    """Offspring indices for systematic resampling with offset ``u`` in [0, 1)."""
    w = np.asarray(weights, dtype=float)
    m = w.shape[0]
    cdf = np.cumsum(w / w.sum())
    cdf[-1] = 1.0
    positions = (u + np.arange(m)) / m
    return np.searchsorted(cdf, positions, side="right")


def resample_systematic(ens: ParticleEnsemble, rng: np.random.Generator) -> ParticleEnsemble:
    """Systematic resampling; the returned ensemble has uniform weights."""
    idx = systematic_indices(ens.weights, rng.random())
    out = ens.take(idx)
    out.log_weights = np.full(ens.M, -np.log(ens.M))
    return out


@dataclass
class KernelPair:
    """Forward kernel ``K_t`` and backward kernel ``L_hat_{t-1}`` for one step."""

    t: int
    y: np.ndarray
    Qx: np.ndarray
    Sigma_K: np.ndarray
    ybar: np.ndarray
    xi_prev: np.ndarray
    Sigma_q_prev: np.ndarray
    TL_matrix: np.ndarray
    TL_offset: np.ndarray
    Sigma_L: np.ndarray
    chol_K: np.ndarray = field(repr=False)
    chol_L: np.ndarray = field(repr=False)

    @property
    def q_hat(self) -> GaussianDist:
        return GaussianDist(self.xi_prev, self.Sigma_q_prev)

    @property
    def shift(self) -> np.ndarray:
        """The constant move ``Qx (y - ybar)`` of the linearized kernel."""
        return self.Qx @ (self.y - self.ybar)

    def forward_mean(self, xs_prev, g_prev) -> np.ndarray:
        """``T_t(x) = x + Qx (y_t - G_t(x))`` row by row."""
        return np.atleast_2d(xs_prev) + (self.y - np.atleast_2d(g_prev)) @ self.Qx.T

    def backward_mean(self, xs_new) -> np.ndarray:
        return np.atleast_2d(xs_new) @ self.TL_matrix.T + self.TL_offset

    def log_forward(self, xs_new, xs_prev, g_prev) -> np.ndarray:
        """``log K_t(x_new | x_prev)``."""
        return mvn_logpdf_chol(np.atleast_2d(xs_new) - self.forward_mean(xs_prev, g_prev), self.chol_K)

    def log_forward_linearized(self, xs_new, xs_prev) -> np.ndarray:
        """``log K_hat_t(x_new | x_prev)`` with ``G_t`` replaced by ``ybar``."""
        mean = np.atleast_2d(xs_prev) + self.shift
        return mvn_logpdf_chol(np.atleast_2d(xs_new) - mean, self.chol_K)

    def log_backward(self, xs_prev, xs_new) -> np.ndarray:
        """``log L_hat_{t-1}(x_prev | x_new)``."""
        return mvn_logpdf_chol(np.atleast_2d(xs_prev) - self.backward_mean(xs_new), self.chol_L)


def gaussian_backward_kernel(xi, Sigma_q, shift, Sigma_K):
    """Condition ``x_prev ~ N(xi, Sigma_q)``, ``x_new = x_prev + shift + N(0, Sigma_K)`` on ``x_new``.

    Returns ``(A, c, Sigma_L)`` with ``x_prev | x_new ~ N(A x_new + c, Sigma_L)``.
    With ``S = Sigma_q + Sigma_K`` one has ``A = Sigma_q S^{-1}``,
    ``I - A = Sigma_K S^{-1}`` and ``Sigma_L = Sigma_q - Sigma_q S^{-1} Sigma_q
    = A Sigma_K``; the last form avoids cancellation when ``Sigma_K`` is tiny
    in some directions.
    """
    S = symmetrize(Sigma_q + Sigma_K)
    A = solve_spd(S, Sigma_q).T
    eye = np.eye(A.shape[0])
    offset = (eye - A) @ xi - A @ shift
    Sigma_L = symmetrize(A @ Sigma_K)
    return A, offset, Sigma_L


def build_forward_kernel(
    gain: GainBundle,
    ens: ParticleEnsemble,
    g_prev,
    y,
    R,
    delta: float,
    t: int = 0,
) -> KernelPair:
    """Assemble ``K_t`` and ``L_hat_{t-1}`` from the gain and the weighted ensemble.

    ``g_prev`` holds ``G_t(x_{t-1})`` for every particle (already cleaned of
    non-finite rows).
    """
    w = ens.weights
    xi, Sigma_q, _ = weighted_moments(ens.xs, w)
    y = np.atleast_1d(np.asarray(y, dtype=float))
    R = np.atleast_2d(np.asarray(R, dtype=float))
    Qx = gain.Qx
    Sigma_K = symmetrize(Qx @ R @ Qx.T + delta**2 * Sigma_q)
    ybar = w @ np.atleast_2d(g_prev)
    shift = Qx @ (y - ybar)
    A, offset, Sigma_L = gaussian_backward_kernel(xi, Sigma_q, shift, Sigma_K)
    return KernelPair(
        t=t,
        y=y,
        Qx=Qx,
        Sigma_K=Sigma_K,
        ybar=ybar,
        xi_prev=xi,
        Sigma_q_prev=Sigma_q,
        TL_matrix=A,
        TL_offset=offset,
        Sigma_L=Sigma_L,
        chol_K=cholesky(Sigma_K),
        chol_L=cholesky(Sigma_L),
    )


def sample_forward(kernel: KernelPair, xs_prev, g_prev, streams: ParticleStreams) -> np.ndarray:
    """``x_t = T_t(x_{t-1}) + eps``, ``eps ~ N(0, Sigma_K)``, one draw per particle stream.

    ``g_prev`` is the ``G_t(x_{t-1})`` already computed for the gain; no model
    call happens here.
    """
    z = streams.standard_normal(kernel.Sigma_K.shape[0])
    return kernel.forward_mean(xs_prev, g_prev) + z @ kernel.chol_K.T


def _guarded_sum(base, *terms):
    """``base + sum(terms)`` with ``-inf`` absorbing (no ``inf - inf`` NaNs)."""
    out = np.array(base, dtype=float, copy=True)
    dead = ~np.isfinite(out)
    for term in terms:
        term = np.asarray(term, dtype=float)
        dead |= ~np.isfinite(term)
        out = out + np.where(np.isfinite(term), term, 0.0)
    return np.where(dead, -np.inf, out)


def incremental_log_weight(kernel: KernelPair, x_prev, x_new, logpost_new, logpost_prev, g_prev):
    """``log pi_t(x_t) - log pi_{t-1}(x_{t-1}) + log L_hat - log K``.

    ``logpost_*`` are cumulative unnormalized log posteriors.  Any
    non-finite ingredient (outside the prior support, diverged model) makes
    the result ``-inf``.
    """
    log_l = kernel.log_backward(x_prev, x_new)
    log_k = kernel.log_forward(x_new, x_prev, g_prev)
    return _guarded_sum(logpost_new, -np.asarray(logpost_prev, dtype=float), log_l, -np.asarray(log_k))


def approx_incremental_log_weight(kernel: KernelPair, x_prev, x_new, loglik_y_t, g_prev):
    """As :func:`incremental_log_weight` with ``pi_{t-1}`` replaced by ``q_hat_{t-1}``.

    Only the current-step likelihood ``log pi(y_t | x_t)`` is needed.
    """
    q_hat = kernel.q_hat
    log_l = kernel.log_backward(x_prev, x_new)
    log_k = kernel.log_forward(x_new, x_prev, g_prev)
    return _guarded_sum(
        q_hat.logpdf(np.atleast_2d(x_new)),
        -q_hat.logpdf(np.atleast_2d(x_prev)),
        loglik_y_t,
        log_l,
        -np.asarray(log_k),
    )


@dataclass
class PathHistory:
    """What the exact-weight refinement needs since the last exact step ``t0``.

    ``log_l[i]``/``log_k[i]`` are the cached ``log L_hat`` and ``log K``
    values for the move ``x_{t0+i} -> x_{t0+i+1}``.
    """

    t0: int
    log_w_t0: np.ndarray
    logpost_t0: np.ndarray
    xs: List[np.ndarray] = field(default_factory=list)
    g_prev: List[np.ndarray] = field(default_factory=list)
    kernels: List[KernelPair] = field(default_factory=list)
    log_l: List[np.ndarray] = field(default_factory=list)
    log_k: List[np.ndarray] = field(default_factory=list)

    def record(self, kernel, x_prev, x_new, g_prev, log_l, log_k):
        if not self.xs:
            self.xs.append(np.array(x_prev, copy=True))
        self.xs.append(np.array(x_new, copy=True))
        self.g_prev.append(np.array(g_prev, copy=True))
        self.kernels.append(kernel)
        self.log_l.append(log_l)
        self.log_k.append(log_k)

    @property
    def length(self) -> int:
        return len(self.kernels)


def refined_log_weight(history: PathHistory, logpost_t, logpost_t0=None):
    """``log w_t0 + log pi_t(x_t) - log pi_t0(x_t0) + sum_i (log L_hat_i - log K_{i+1})``."""
    if logpost_t0 is None:
        logpost_t0 = history.logpost_t0
    terms = [logpost_t, -np.asarray(logpost_t0, dtype=float)]
    for log_l, log_k in zip(history.log_l, history.log_k):
        terms.append(log_l)
        terms.append(-np.asarray(log_k))
    return _guarded_sum(history.log_w_t0, *terms)


def optimal_backward_kernel(q_prev: GaussianDist, F, c, Sigma_K):
    """Optimal ``L_{t-1}`` for a Gaussian ``q_{t-1}`` and a linear kernel.

    With ``K(x_t | x) = N(F x + c, Sigma_K)`` the marginal is
    ``q_t = N(F m + c, F P F^T + Sigma_K)`` and ``L^opt`` is the Gaussian
    conditional of ``x_{t-1}`` given ``x_t``.  Returns ``(A, offset, cov, q_t)``
    with ``L^opt(. | x_t) = N(A x_t + offset, cov)``.
    """
    F = np.atleast_2d(F)
    m, P = q_prev.mean, q_prev.cov
    q_t = GaussianDist(F @ m + c, F @ P @ F.T + Sigma_K)
    A = solve_spd(q_t.cov, F @ P).T
    offset = m - A @ q_t.mean
    cov = symmetrize(P - A @ F @ P)
    return A, offset, cov, q_t


class _Sampler:
    """State shared by the two SMCS drivers."""

    def __init__(self, model, data, config, streams, truth, keep_trace):
        self.model = model
        self.ys = observations_array(data)
        self.T = self.ys.shape[0]
        if self.ys.shape[1] != model.n_y:
            raise ValueError(f"data has {self.ys.shape[1]} columns, model expects {model.n_y}")
        self.config = config
        self.M = config.M
        self.streams = streams or ParticleStreams.from_seed(config.seed, self.M)
        if len(self.streams) != self.M:
            raise ValueError("one random stream per particle is required")
        self.truth = truth
        self.evals = 0
        self.records: List[RunRecord] = []
        self.trace = [] if keep_trace else None
        self.refinement_steps: List[int] = []
        self.resampling_steps: List[int] = []
        self.degenerate_steps: List[int] = []
        self.clock = time.perf_counter()

    def horizon(self, t):
        return min(t + 1, self.T)

    def evaluate(self, xs, t):
        preds = self.model.trajectory(xs, self.horizon(t))
        self.evals += xs.shape[0]
        return preds

    def logpost(self, xs, preds, t):
        lp = self.model.prior.logpdf(xs)
        if t == 0:
            return lp
        ll = self.model.loglik(preds[:, :t], self.ys[:t])
        return _guarded_sum(lp, ll.sum(axis=1))

    def initialize(self) -> ParticleEnsemble:
        xs = self.model.prior.sample(self.streams)
        preds = self.evaluate(xs, 0)
        lp = self.logpost(xs, preds, 0)
        # q0 is the prior, so the initial weights are uniform
        lw = np.full(self.M, -np.log(self.M))
        return ParticleEnsemble(xs, lw, preds, lp, ~np.all(np.isfinite(preds[:, 0]), axis=1))

    def kernel_for(self, ens: ParticleEnsemble, t):
        try:
            g_prev, bad = _clean_predictions(ens.preds[:, t - 1, :])
            ens.dead = ens.dead | bad
            ens.log_weights = normalize_log_weights(np.where(ens.dead, -np.inf, ens.log_weights))
            mu, C = prior_moments(AugmentedEnsemble(ens.xs, g_prev), ens.weights)
            R = self.model.noise_cov(t)
            gain = kalman_gain(C, R, mu)
            kernel = build_forward_kernel(gain, ens, g_prev, self.ys[t - 1], R, self.config.delta, t)
        except DegenerateEnsemble as exc:
            raise DegenerateEnsemble(str(exc), step=t) from None
        return kernel, g_prev

    def move(self, ens, t):
        kernel, g_prev = self.kernel_for(ens, t)
        xs_new = sample_forward(kernel, ens.xs, g_prev, self.streams)
        preds_new = self.evaluate(xs_new, t)
        log_l = kernel.log_backward(ens.xs, xs_new)
        log_k = kernel.log_forward(xs_new, ens.xs, g_prev)
        return kernel, g_prev, xs_new, preds_new, log_l, log_k

    def check_exact_ess(self, value, t):
        if value >= 2.0:
            return
        message = f"effective sample size {value:.3g} < 2 after exact weights"
        if self.config.on_degenerate == "raise":
            raise DegenerateEnsemble(message, step=t)
        log.warning("step %d: %s; resampling and continuing", t, message)
        self.degenerate_steps.append(t)

    def needs_resampling(self, value):
        return value < max(self.config.ess_resample_fraction * self.M, 2.0)

    def maybe_resample(self, ens, value, t):
        if self.needs_resampling(value):
            self.resampling_steps.append(t)
            return resample_systematic(ens, self.streams.control), True
        return ens, False

    def emit(self, t, ens, ess_value, refined, resampled):
        mean, std, bias = summarize(ens.xs, ens.weights, self.truth)
        self.records.append(
            RunRecord(t, mean, std, bias, float(ess_value), refined, resampled, self.evals,
                      time.perf_counter() - self.clock)
        )

    def result(self, name, ens):
        return RunResult(
            name,
            self.records,
            ens.xs,
            ens.log_weights,
            refinement_steps=self.refinement_steps,
            resampling_steps=self.resampling_steps,
            degenerate_steps=self.degenerate_steps,
            trace=self.trace,
        )


def run_enkf_smcs(
    model: ForwardModel,
    data: Sequence[ObservationRecord],
    config: SmcsConfig,
    streams: Optional[ParticleStreams] = None,
    truth=None,
    keep_trace: bool = False,
) -> RunResult:
    """EnKF-SMCS: exact incremental weights at every step.

    Resampling happens whenever the ESS of the exact weights falls below
    ``ess_resample_fraction * M``.
    """
    s = _Sampler(model, data, config, streams, truth, keep_trace)
    ens = s.initialize()
    for t in range(1, s.T + 1):
        kernel, g_prev, xs_new, preds_new, log_l, log_k = s.move(ens, t)
        logpost_new = s.logpost(xs_new, preds_new, t)
        # same operand order as refined_log_weight over a one-step path
        lw = normalize_log_weights(_guarded_sum(ens.log_weights, logpost_new, -ens.logpost, log_l, -log_k))
        dead = ens.dead | ~np.all(np.isfinite(preds_new[:, :t]), axis=(1, 2))
        ens = ParticleEnsemble(xs_new, lw, preds_new, logpost_new, dead)
        value = ess(lw)
        s.check_exact_ess(value, t)
        s.refinement_steps.append(t)
        if s.trace is not None:
            s.trace.append({"t": t, "xs": xs_new.copy(), "log_weights": lw.copy(), "kernel": kernel})
        s.emit(t, ens, value, True, s.needs_resampling(value))
        ens, _ = s.maybe_resample(ens, value, t)
    return s.result("enkf_smcs", ens)


def run_enkf_smcs_wr(
    model: ForwardModel,
    data: Sequence[ObservationRecord],
    config: SmcsConfig,
    streams: Optional[ParticleStreams] = None,
    truth=None,
    keep_trace: bool = False,
) -> RunResult:
    """EnKF-SMCS with weight refinement.

    Approximate weights are propagated every step; exact weights are
    recovered from the stored kernel ratios when the approximate ESS drops
    below ``ess_min_fraction * M``, when more than ``delta_T_max`` steps
    have passed since the last exact step, or at the final step.  Resampling
    only ever happens right after an exact-weight step.
    """
    s = _Sampler(model, data, config, streams, truth, keep_trace)
    ens = s.initialize()
    history = PathHistory(0, ens.log_weights.copy(), ens.logpost.copy())
    ess_min = config.ess_min_fraction * s.M
    for t in range(1, s.T + 1):
        kernel, g_prev, xs_new, preds_new, log_l, log_k = s.move(ens, t)
        if history.length == 0:
            # move() may have renormalized after marking diverged particles
            history.log_w_t0 = ens.log_weights.copy()
        history.record(kernel, ens.xs, xs_new, g_prev, log_l, log_k)
        q_hat = kernel.q_hat
        loglik_t = s.model.loglik(preds_new[:, t - 1 : t], s.ys[t - 1 : t], start=t)[:, 0]
        incr = _guarded_sum(q_hat.logpdf(xs_new), -q_hat.logpdf(ens.xs), loglik_t, log_l, -log_k)
        lw_approx = normalize_log_weights(_guarded_sum(ens.log_weights, incr))
        ess_approx = ess(lw_approx)
        dead = ens.dead | ~np.all(np.isfinite(preds_new[:, :t]), axis=(1, 2))
        refine = ess_approx < ess_min or t - history.t0 > config.delta_T_max or t == s.T
        if not refine:
            ens = ParticleEnsemble(xs_new, lw_approx, preds_new, None, dead)
            if s.trace is not None:
                s.trace.append({"t": t, "xs": xs_new.copy(), "log_weights": lw_approx.copy(),
                                "kernel": kernel, "refined": False})
            s.emit(t, ens, ess_approx, False, False)
            continue
        logpost_new = s.logpost(xs_new, preds_new, t)
        lw = normalize_log_weights(np.where(dead, -np.inf, refined_log_weight(history, logpost_new)))
        ens = ParticleEnsemble(xs_new, lw, preds_new, logpost_new, dead)
        value = ess(lw)
        s.check_exact_ess(value, t)
        s.refinement_steps.append(t)
        if s.trace is not None:
            s.trace.append({"t": t, "xs": xs_new.copy(), "log_weights": lw.copy(),
                            "kernel": kernel, "refined": True, "history": history})
        s.emit(t, ens, value, True, s.needs_resampling(value))
        ens, _ = s.maybe_resample(ens, value, t)
        history = PathHistory(t, ens.log_weights.copy(), ens.logpost.copy())
    return s.result("enkf_smcs_wr", ens)


def run(model, data, config: SmcsConfig, streams=None, truth=None, keep_trace=False) -> RunResult:
    """Dispatch on ``config.algorithm``."""
    if config.algorithm == "enkf_smcs":
        return run_enkf_smcs(model, data, config, streams, truth, keep_trace)
    if config.algorithm == "enkf_smcs_wr":
        return run_enkf_smcs_wr(model, data, config, streams, truth, keep_trace)
    from .enkf import enkf_run

    return enkf_run(model, data, config.M, streams=streams, seed=config.seed, truth=truth,
                    keep_trace=keep_trace)
