"""Dense linear algebra and multivariate Gaussian primitives.

Every covariance that enters the package goes through :func:`cholesky`,
which applies a bounded diagonal-jitter escalation before giving up with
:class:`~enkf_smcs.exceptions.NotPositiveDefinite`.  Densities are always
returned in log space.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.linalg import solve_triangular

from .exceptions import NotPositiveDefinite

LOG_2PI = float(np.log(2.0 * np.pi))

JITTER_START = 1e-12
JITTER_STOP = 1e-6
JITTER_GROWTH = 10.0


def symmetrize(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    return 0.5 * (a + a.T)


def _as_square(a) -> np.ndarray:
    a = np.atleast_2d(np.asarray(a, dtype=float))
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def cholesky(cov, *, return_jitter: bool = False):
    """Lower Cholesky factor of ``cov`` with jitter escalation.

    The plain factorization is tried first.  On failure ``eps * trace/d`` is
    added to the diagonal for ``eps`` = 1e-12, 1e-11, ..., 1e-6; if none of
    those succeed :class:`NotPositiveDefinite` is raised.  A zero trace uses a
    unit scale so that an all-zero covariance still becomes factorable.

    Parameters
    ----------
    cov : array_like, shape (d, d)
        Symmetric matrix.  Only the lower triangle is read by LAPACK, so the
        caller is responsible for symmetry (see :func:`symmetrize`).
    return_jitter : bool
        Also return the diagonal shift that was finally applied.
    """
    a = _as_square(cov)
    if not np.all(np.isfinite(a)):
        raise NotPositiveDefinite("matrix has non-finite entries")
    d = a.shape[0]
    jitter = 0.0
    try:
        chol = np.linalg.cholesky(a)
    except np.linalg.LinAlgError:
        chol = None
    if chol is None:
        scale = np.trace(a) / d
        if not scale > 0.0:
            scale = 1.0
        eps = JITTER_START
        eye = np.eye(d)
        while eps <= JITTER_STOP * (1.0 + 1e-9):
            jitter = eps * scale
            try:
                chol = np.linalg.cholesky(a + jitter * eye)
                break
            except np.linalg.LinAlgError:
                eps *= JITTER_GROWTH
        if chol is None:
            raise NotPositiveDefinite(
                f"Cholesky failed after jitter up to {JITTER_STOP:g}*trace/d"
            )
    if return_jitter:
        return chol, jitter
    return chol


def chol_solve(chol: np.ndarray, b) -> np.ndarray:
    """Solve ``(L L^T) x = b`` by two triangular solves."""
    y = solve_triangular(chol, b, lower=True, check_finite=False)
    return solve_triangular(chol.T, y, lower=False, check_finite=False)


def solve_spd(a, b) -> np.ndarray:
    """Return ``X`` with ``A X = B`` for symmetric positive definite ``A``.

    ``A^{-1}`` is never formed; the solve is two triangular substitutions
    against :func:`cholesky` of ``A`` (jitter policy included).
    """
    b = np.asarray(b, dtype=float)
    return chol_solve(cholesky(symmetrize(_as_square(a))), b)


def chol_logdet(chol: np.ndarray) -> float:
    return 2.0 * float(np.sum(np.log(np.diag(chol))))


def mvn_logpdf_chol(resid, chol: np.ndarray) -> np.ndarray:
    """Zero-mean Gaussian log density of ``resid`` given a lower factor.

    ``resid`` may be a single vector of length ``d`` or a stack ``(n, d)``;
    the result is a scalar or an ``(n,)`` array respectively.  Rows with
    non-finite entries evaluate to ``-inf``.
    """
    r = np.asarray(resid, dtype=float)
    single = r.ndim == 1
    r2 = np.atleast_2d(r)
    d = chol.shape[0]
    bad = ~np.all(np.isfinite(r2), axis=1)
    if bad.any():
        r2 = np.where(bad[:, None], 0.0, r2)
    whitened = solve_triangular(chol, r2.T, lower=True, check_finite=False)
    maha = np.einsum("ij,ij->j", whitened, whitened)
    out = -0.5 * maha - 0.5 * (d * LOG_2PI + chol_logdet(chol))
    out[bad] = -np.inf
    return float(out[0]) if single else out


@dataclass
class GaussianDist:
    """Multivariate normal ``N(mean, cov)`` with a lazily cached factor.

    The covariance is symmetrized on construction.
    """

    mean: np.ndarray
    cov: np.ndarray
    _chol: Optional[np.ndarray] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.mean = np.atleast_1d(np.asarray(self.mean, dtype=float)).copy()
        cov = _as_square(self.cov)
        if cov.shape[0] != self.mean.shape[0]:
            raise ValueError(
                f"mean has dimension {self.mean.shape[0]} but cov is {cov.shape}"
            )
        self.cov = symmetrize(cov)

    @property
    def dim(self) -> int:
        return self.mean.shape[0]

    @property
    def chol(self) -> np.ndarray:
        if self._chol is None:
            self._chol = cholesky(self.cov)
        return self._chol

    def logpdf(self, x) -> np.ndarray:
        return gaussian_logpdf(self, x)

    def sample(self, rng: np.random.Generator, size: Optional[int] = None):
        if size is None:
            return gaussian_sample(self, rng)
        z = rng.standard_normal((size, self.dim))
        return self.mean + z @ self.chol.T


def gaussian_sample(dist: GaussianDist, rng: np.random.Generator) -> np.ndarray:
    """One draw ``mean + L z`` with ``z`` standard normal from ``rng``."""
    z = rng.standard_normal(dist.dim)
    return dist.mean + dist.chol @ z


def gaussian_logpdf(dist: GaussianDist, x):
    """Log density of ``dist`` at ``x`` (a vector or an ``(n, d)`` stack)."""
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != dist.dim:
        raise ValueError(f"point has dimension {x.shape[-1]}, expected {dist.dim}")
    return mvn_logpdf_chol(x - dist.mean, dist.chol)


def weighted_moments(samples, weights=None):
    """Weighted mean and covariance of the rows of ``samples``.

    With ``weights=None`` (or uniform weights) the covariance uses the
    ``1/(M-1)`` scaling.  Non-uniform weights use the reliability-weights
    correction ``1 / (1 - sum w^2)``, which reduces to the same thing.
    Returns the mean, the covariance and the effective sample size.
    """
    xs = np.asarray(samples, dtype=float)
    if xs.ndim == 1:
        xs = xs[:, None]
    m = xs.shape[0]
    if weights is None:
        w = np.full(m, 1.0 / m)
    else:
        w = np.asarray(weights, dtype=float)
        w = w / w.sum()
    sum_w2 = float(np.dot(w, w))
    ess = 1.0 / sum_w2
    live = w > 0
    mean = w[live] @ xs[live]
    centered = xs[live] - mean
    denom = 1.0 - sum_w2
    if denom <= 0.0:
        cov = np.zeros((xs.shape[1], xs.shape[1]))
    else:
        cov = (centered * w[live, None]).T @ centered / denom
    return mean, symmetrize(cov), ess
