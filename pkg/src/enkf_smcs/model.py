"""Forward models, priors and observation simulation.

A :class:`ForwardModel` maps a parameter vector ``x`` to predicted
observations ``G_t(x)`` for ``t = 1..T``.  All built-in models are
*trajectory* models: one call to :meth:`ForwardModel.trajectory` yields
``G_1(x), ..., G_h(x)`` at once, and that single call is what the drivers
count as one model evaluation per parameter vector.
"""
from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from . import ode
from .exceptions import DomainError
from .gaussmath import GaussianDist, cholesky, mvn_logpdf_chol, symmetrize
from .streams import ParticleStreams


@dataclass
class PriorSpec:
    """Either a uniform box (``lower``/``upper``) or a Gaussian (``mean``/``cov``)."""

    kind: str
    lower: Optional[np.ndarray] = None
    upper: Optional[np.ndarray] = None
    mean: Optional[np.ndarray] = None
    cov: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.kind == "uniform":
            self.lower = np.atleast_1d(np.asarray(self.lower, dtype=float))
            self.upper = np.atleast_1d(np.asarray(self.upper, dtype=float))
            if self.lower.shape != self.upper.shape:
                raise ValueError("uniform prior bounds differ in shape")
            if not (np.all(np.isfinite(self.lower)) and np.all(np.isfinite(self.upper))):
                raise ValueError("uniform prior bounds must be finite")
            if np.any(self.lower >= self.upper):
                raise ValueError("uniform prior needs lower < upper")
        elif self.kind == "gaussian":
            self._dist = GaussianDist(self.mean, self.cov)
            self.mean = self._dist.mean
            self.cov = self._dist.cov
            self._dist.chol  # fail early when cov is not SPD
        else:
            raise ValueError(f"unknown prior kind {self.kind!r}")

    @classmethod
    def uniform(cls, lower, upper) -> "PriorSpec":
        return cls("uniform", lower=lower, upper=upper)

    @classmethod
    def gaussian(cls, mean, std=None, cov=None) -> "PriorSpec":
        if cov is None:
            cov = np.diag(np.square(np.atleast_1d(np.asarray(std, dtype=float))))
        return cls("gaussian", mean=mean, cov=cov)

    @property
    def dim(self) -> int:
        return (self.lower if self.kind == "uniform" else self.mean).shape[0]

    def logpdf(self, xs) -> np.ndarray:
        xs = np.atleast_2d(np.asarray(xs, dtype=float))
        if self.kind == "gaussian":
            return self._dist.logpdf(xs)
        inside = np.all((xs >= self.lower) & (xs <= self.upper), axis=1)
        logvol = float(np.sum(np.log(self.upper - self.lower)))
        return np.where(inside, -logvol, -np.inf)

    def sample(self, streams: ParticleStreams) -> np.ndarray:
        """One draw per particle stream, shape ``(len(streams), dim)``."""
        if self.kind == "uniform":
            u = streams.uniform(self.dim)
            return self.lower + (self.upper - self.lower) * u
        z = streams.standard_normal(self.dim)
        return self.mean + z @ self._dist.chol.T

    def to_dict(self) -> dict:
        if self.kind == "uniform":
            return {"kind": "uniform", "lower": self.lower.tolist(), "upper": self.upper.tolist()}
        return {"kind": "gaussian", "mean": self.mean.tolist(), "cov": self.cov.tolist()}


@dataclass(frozen=True)
class ObservationRecord:
    t: int
    y: np.ndarray


class ForwardModel:
    """Base class for ``y_t = G_t(x) + eta_t`` with ``eta_t ~ N(0, R_t)``.

    Subclasses implement :meth:`trajectory`.  ``noise_cov`` is either one
    ``(n_y, n_y)`` matrix shared by all steps or a ``(T, n_y, n_y)`` stack.
    """

    name = "model"

    def __init__(self, n_x: int, n_y: int, T: int, noise_cov, prior: PriorSpec):
        self.n_x = int(n_x)
        self.n_y = int(n_y)
        self.T = int(T)
        self.prior = prior
        r = np.asarray(noise_cov, dtype=float)
        if r.ndim == 2:
            r = np.broadcast_to(r, (self.T,) + r.shape)
        if r.shape != (self.T, self.n_y, self.n_y):
            raise ValueError(f"noise covariance has shape {r.shape}")
        self._R = np.stack([symmetrize(ri) for ri in r])
        self._R_chol = [None] * self.T
        if prior.dim != self.n_x:
            raise ValueError("prior dimension does not match n_x")

    def noise_cov(self, t: int) -> np.ndarray:
        """``R_t`` for ``t`` in ``1..T``."""
        return self._R[t - 1]

    def noise_chol(self, t: int) -> np.ndarray:
        if self._R_chol[t - 1] is None:
            self._R_chol[t - 1] = cholesky(self._R[t - 1])
        return self._R_chol[t - 1]

    def trajectory(self, xs, horizon: int) -> np.ndarray:
        """``G_1..G_horizon`` for each row of ``xs``, shape ``(n, horizon, n_y)``.

        Rows whose evaluation diverged contain NaN.
        """
        raise NotImplementedError

    def evaluate(self, x, t: int) -> np.ndarray:
        """``G_t(x)`` for a single parameter vector."""
        if not 1 <= t <= self.T:
            raise ValueError(f"step {t} outside 1..{self.T}")
        return self.trajectory(np.asarray(x, dtype=float)[None, :], t)[0, t - 1]

    def loglik(self, preds, ys, start: int = 1) -> np.ndarray:
        """Per-step log-likelihoods ``log N(y_t; G_t(x), R_t)``.

        ``preds`` has shape ``(n, h, n_y)`` holding steps ``start..start+h-1``
        and ``ys`` the matching ``(h, n_y)`` data.  Returns ``(n, h)``; rows
        with non-finite predictions give ``-inf``.
        """
        preds = np.asarray(preds, dtype=float)
        out = np.empty(preds.shape[:2])
        for j in range(preds.shape[1]):
            t = start + j
            out[:, j] = mvn_logpdf_chol(ys[j] - preds[:, j, :], self.noise_chol(t))
        return out

    def describe(self) -> dict:
        return {"name": self.name, "n_x": self.n_x, "n_y": self.n_y, "T": self.T}


def bernoulli_solution(x, tau):
    """Closed-form solution of ``v' = v - v^3`` with ``v(0) = x``.

    Works elementwise on arrays.  Raises :class:`DomainError` if the radicand
    is not positive or the result is not finite.
    """
    x = np.asarray(x, dtype=float)
    tau = np.asarray(tau, dtype=float)
    rad = x * x + (1.0 - x * x) * np.exp(-2.0 * tau)
    if np.any(rad <= 0.0):
        raise DomainError("x^2 + (1 - x^2) exp(-2 tau) must be positive")
    v = x / np.sqrt(rad)
    if not np.all(np.isfinite(v)):
        raise DomainError("non-finite Bernoulli solution")
    return v if v.ndim else float(v)


class BernoulliModel(ForwardModel):
    """Initial condition of the Bernoulli equation observed at ``t * dt``."""

    name = "bernoulli"

    def __init__(self, sigma=0.4, dt=0.3, T=50, prior: Optional[PriorSpec] = None):
        prior = prior or PriorSpec.uniform([-1.0], [10.0])
        super().__init__(1, 1, T, np.array([[sigma**2]]), prior)
        self.sigma = float(sigma)
        self.dt = float(dt)

    def trajectory(self, xs, horizon):
        xs = np.atleast_2d(np.asarray(xs, dtype=float))
        taus = self.dt * np.arange(1, horizon + 1)
        x = xs[:, :1]
        with np.errstate(over="ignore", invalid="ignore"):
            rad = x * x + (1.0 - x * x) * np.exp(-2.0 * taus)[None, :]
            v = x / np.sqrt(rad)
        v[~np.isfinite(v)] = np.nan
        return v[:, :, None]

    def describe(self):
        return {**super().describe(), "sigma": self.sigma, "dt": self.dt}


class Lorenz63Model(ForwardModel):
    """Parameters ``(alpha, beta, rho)`` observed through one state component.

    The initial state is fixed and known; ``observed`` lists state indices
    (0 = x, 1 = y, 2 = z).
    """

    name = "lorenz63"

    def __init__(
        self,
        observed: Sequence[int] = (0,),
        x0=(1.0, 1.0, 1.0),
        noise_std=3.0,
        dt=0.1,
        T=100,
        substeps=20,
        prior: Optional[PriorSpec] = None,
    ):
        self.observed = np.asarray(observed, dtype=int)
        n_y = len(self.observed)
        prior = prior or PriorSpec.gaussian([6.0, 0.0, 24.0], std=[1.0, 1.0, 1.0])
        std = np.broadcast_to(np.asarray(noise_std, dtype=float), (n_y,))
        super().__init__(3, n_y, T, np.diag(std**2), prior)
        self.x0 = np.asarray(x0, dtype=float)
        self.noise_std = std.copy()
        self.dt = float(dt)
        self.substeps = int(substeps)

    def states(self, xs, horizon):
        xs = np.atleast_2d(np.asarray(xs, dtype=float))
        # model vector is (alpha, beta, rho); the vector field wants (alpha, rho, beta)
        params = xs[:, [0, 2, 1]]
        return ode.lorenz63_trajectories(params, self.x0, self.dt, self.substeps, horizon)

    def trajectory(self, xs, horizon):
        return self.states(xs, horizon)[:, :, self.observed]

    def describe(self):
        return {
            **super().describe(),
            "observed": self.observed.tolist(),
            "x0": self.x0.tolist(),
            "noise_std": self.noise_std.tolist(),
            "dt": self.dt,
            "substeps": self.substeps,
        }


ERK_X0 = np.array([66.0, 0.054, 0.019, 59.0, 0.09, 0.012, 65.0, 26.0, 175.0, 161.0, 2.18])
ERK_NOISE_STD = np.array(
    [0.005, 5e-5, 2e-5, 0.035, 0.0005, 5e-6, 0.05, 0.02, 0.03, 0.003, 0.002]
)
ERK_TRUTH = np.array(
    [0.5242, 0.0075, 0.6108, 0.0025, 0.0371, 0.8101, 0.0713, 0.0687, 0.96, 0.0012, 0.872]
)
ERK_PRIOR_MEAN = np.array([0.5, 0.1, 0.62, 0.04, -0.5, 0.8, 0.0, 0.4, 0.9, 0.0, 0.9])
ERK_PRIOR_STD = np.array([0.05, 0.03, 0.01, 0.04, 0.5, 0.02, 0.05, 0.3, 0.1, 0.005, 0.05])
ERK_OBSERVED = (0, 3, 6, 9)


class ERKModel(ForwardModel):
    """Kinetic parameters k1..k11 of the RKIP-regulated ERK pathway."""

    name = "erk"

    def __init__(
        self,
        observed: Sequence[int] = ERK_OBSERVED,
        x0=ERK_X0,
        noise_std=None,
        dt=0.001,
        T=50,
        substeps=4,
        prior: Optional[PriorSpec] = None,
    ):
        self.observed = np.asarray(observed, dtype=int)
        if noise_std is None:
            noise_std = ERK_NOISE_STD[self.observed]
        std = np.broadcast_to(np.asarray(noise_std, dtype=float), (len(self.observed),))
        prior = prior or PriorSpec.gaussian(ERK_PRIOR_MEAN, std=ERK_PRIOR_STD)
        super().__init__(11, len(self.observed), T, np.diag(std**2), prior)
        self.x0 = np.asarray(x0, dtype=float)
        self.noise_std = std.copy()
        self.dt = float(dt)
        self.substeps = int(substeps)

    def states(self, xs, horizon):
        return ode.erk_trajectories(xs, self.x0, self.dt, self.substeps, horizon)

    def trajectory(self, xs, horizon):
        return self.states(xs, horizon)[:, :, self.observed]

    def describe(self):
        return {
            **super().describe(),
            "observed": self.observed.tolist(),
            "x0": self.x0.tolist(),
            "noise_std": self.noise_std.tolist(),
            "dt": self.dt,
            "substeps": self.substeps,
        }


class LinearGaussianModel(ForwardModel):
    """``G_t(x) = A_t x`` with a Gaussian prior: the exactly solvable case."""

    name = "linear_gaussian"

    def __init__(self, A, noise_cov, prior: PriorSpec):
        A = np.asarray(A, dtype=float)
        if A.ndim != 3:
            raise ValueError("A must have shape (T, n_y, n_x)")
        if prior.kind != "gaussian":
            raise ValueError("the linear-Gaussian model needs a Gaussian prior")
        super().__init__(A.shape[2], A.shape[1], A.shape[0], noise_cov, prior)
        self.A = A

    @classmethod
    def random(cls, rng: np.random.Generator, n_x=2, n_y=1, T=5, noise_var=1.0):
        A = rng.standard_normal((T, n_y, n_x))
        prior = PriorSpec.gaussian(np.zeros(n_x), std=np.ones(n_x))
        return cls(A, noise_var * np.eye(n_y), prior)

    def trajectory(self, xs, horizon):
        xs = np.atleast_2d(np.asarray(xs, dtype=float))
        return np.einsum("tyx,mx->mty", self.A[:horizon], xs)

    def exact_posteriors(self, ys) -> List[GaussianDist]:
        """Conjugate posteriors ``pi_1, ..., pi_T`` by the Kalman recursion."""
        mean = self.prior.mean.copy()
        cov = self.prior.cov.copy()
        out = []
        for t in range(1, len(ys) + 1):
            a = self.A[t - 1]
            s = a @ cov @ a.T + self.noise_cov(t)
            gain = np.linalg.solve(s, a @ cov).T
            mean = mean + gain @ (ys[t - 1] - a @ mean)
            cov = symmetrize(cov - gain @ a @ cov)
            out.append(GaussianDist(mean, cov))
        return out

    def describe(self):
        return {**super().describe(), "A": self.A.tolist(), "R": self._R[0].tolist()}


def simulate_observations(
    model: ForwardModel, x_true, rng: np.random.Generator
) -> List[ObservationRecord]:
    """``y_t = G_t(x_true) + eta_t`` for ``t = 1..T``."""
    x_true = np.asarray(x_true, dtype=float)
    if x_true.shape != (model.n_x,):
        raise ValueError(f"truth must have length {model.n_x}")
    preds = model.trajectory(x_true[None, :], model.T)[0]
    if not np.all(np.isfinite(preds)):
        raise DomainError("forward model diverged at the true parameters")
    records = []
    for t in range(1, model.T + 1):
        noise = model.noise_chol(t) @ rng.standard_normal(model.n_y)
        records.append(ObservationRecord(t, preds[t - 1] + noise))
    return records


def observations_array(records: Sequence[ObservationRecord]) -> np.ndarray:
    return np.stack([np.atleast_1d(r.y) for r in sorted(records, key=lambda r: r.t)])


def write_observations(path, records: Sequence[ObservationRecord], sidecar: Optional[dict] = None):
    """Write the observation CSV (``t,y1,...``) and an optional JSON sidecar."""
    path = Path(path)
    n_y = len(np.atleast_1d(records[0].y))
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["t"] + [f"y{i + 1}" for i in range(n_y)])
        for rec in records:
            writer.writerow([rec.t] + [repr(float(v)) for v in np.atleast_1d(rec.y)])
    if sidecar is not None:
        sidecar_path(path).write_text(json.dumps(sidecar, indent=2, sort_keys=True) + "\n")


def sidecar_path(path) -> Path:
    path = Path(path)
    return path.with_name(path.stem + ".meta.json")


def read_observations(path) -> List[ObservationRecord]:
    with Path(path).open(newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if not header or header[0] != "t" or len(header) < 2:
            raise ValueError(f"{path}: expected header 't,y1,...'")
        records = [ObservationRecord(int(row[0]), np.array([float(v) for v in row[1:]])) for row in reader if row]
    return records
