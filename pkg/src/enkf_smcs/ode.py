"""Vector fields of the benchmark ODEs and a fixed-step RK4 integrator.

The right-hand sides are numba-compiled in-place kernels so that whole
ensembles of parameter vectors can be integrated in one compiled loop.  The
public ``*_rhs`` functions are allocating wrappers around the same kernels.
"""
from __future__ import annotations

from typing import Callable

import numba as nb
import numpy as np

from .exceptions import NonFiniteState

# Rows are species x1..x11, columns reactions v1..v7.
ERK_STOICHIOMETRY = np.array(
    [
        [-1, 0, 1, 0, 0, 0, 0],
        [-1, 0, 0, 0, 0, 0, 1],
        [1, -1, 0, 0, 0, 0, 0],
        [0, 1, -1, 0, 0, 0, 0],
        [0, 0, 1, -1, 0, 0, 0],
        [0, 0, 1, 0, 0, -1, 0],
        [0, 0, 0, -1, 1, 0, 0],
        [0, 0, 0, 1, -1, 0, 0],
        [0, -1, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, -1, 1],
        [0, 0, 0, 0, 0, 1, -1],
    ],
    dtype=np.float64,
)
_S = ERK_STOICHIOMETRY.copy()


@nb.njit(cache=True)
def _lorenz63_into(s, p, out):
    # p = (alpha, rho, beta)
    out[0] = p[0] * (s[1] - s[0])
    out[1] = s[0] * (p[1] - s[2]) - s[1]
    out[2] = s[0] * s[1] - p[2] * s[2]


@nb.njit(cache=True)
def _erk_rates(s, k, v):
    v[0] = k[0] * s[0] * s[1] - k[1] * s[2]
    v[1] = k[2] * s[2] * s[8] - k[3] * s[3]
    v[2] = k[4] * s[3]
    v[3] = k[5] * s[4] * s[6] - k[6] * s[7]
    v[4] = k[7] * s[7]
    v[5] = k[8] * s[5] * s[9] - k[9] * s[10]
    v[6] = k[10] * s[10]


@nb.njit(cache=True)
def _erk_into(s, k, out):
    v = np.empty(7)
    _erk_rates(s, k, v)
    for i in range(11):
        acc = 0.0
        for j in range(7):
            acc += _S[i, j] * v[j]
        out[i] = acc


def lorenz63_rhs(state, params) -> np.ndarray:
    """Lorenz 63 vector field; ``params`` is ordered ``(alpha, rho, beta)``."""
    out = np.empty(3)
    _lorenz63_into(np.asarray(state, dtype=float), np.asarray(params, dtype=float), out)
    return out


def erk_rates(state, params) -> np.ndarray:
    """The seven reaction rates of the ERK pathway at ``state``."""
    v = np.empty(7)
    _erk_rates(np.asarray(state, dtype=float), np.asarray(params, dtype=float), v)
    return v


def erk_rhs(state, params) -> np.ndarray:
    """``S @ V(state)`` for the 11-species ERK network, ``params`` = k1..k11."""
    out = np.empty(11)
    _erk_into(np.asarray(state, dtype=float), np.asarray(params, dtype=float), out)
    return out


def integrate_fixed_rk4(
    rhs: Callable[[np.ndarray], np.ndarray], state0, dt_obs: float, substeps: int
) -> np.ndarray:
    """Classical RK4 over one interval of length ``dt_obs``.

    Raises :class:`NonFiniteState` as soon as a stage or the state stops
    being finite.
    """
    if substeps < 1:
        raise ValueError("substeps must be >= 1")
    if not dt_obs > 0:
        raise ValueError("dt_obs must be positive")
    h = dt_obs / substeps
    y = np.array(state0, dtype=float)
    for _ in range(substeps):
        k1 = np.asarray(rhs(y), dtype=float)
        k2 = np.asarray(rhs(y + 0.5 * h * k1), dtype=float)
        k3 = np.asarray(rhs(y + 0.5 * h * k2), dtype=float)
        k4 = np.asarray(rhs(y + h * k3), dtype=float)
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if not np.all(np.isfinite(y)):
            raise NonFiniteState("RK4 produced a non-finite state")
    return y


@nb.njit(cache=True)
def _rk4_trajectories(rhs_into, params, x0, dt_obs, substeps, horizon, out):
    # out[m, t] holds the state at time (t + 1) * dt_obs; diverged rows are NaN.
    n = params.shape[0]
    d = x0.shape[0]
    h = dt_obs / substeps
    y = np.empty(d)
    tmp = np.empty(d)
    k1 = np.empty(d)
    k2 = np.empty(d)
    k3 = np.empty(d)
    k4 = np.empty(d)
    for m in range(n):
        p = params[m]
        for i in range(d):
            y[i] = x0[i]
        ok = True
        for t in range(horizon):
            if ok:
                for _ in range(substeps):
                    rhs_into(y, p, k1)
                    for i in range(d):
                        tmp[i] = y[i] + 0.5 * h * k1[i]
                    rhs_into(tmp, p, k2)
                    for i in range(d):
                        tmp[i] = y[i] + 0.5 * h * k2[i]
                    rhs_into(tmp, p, k3)
                    for i in range(d):
                        tmp[i] = y[i] + h * k3[i]
                    rhs_into(tmp, p, k4)
                    for i in range(d):
                        y[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i])
                for i in range(d):
                    if not np.isfinite(y[i]):
                        ok = False
            for i in range(d):
                out[m, t, i] = y[i] if ok else np.nan


def _batched(rhs_into, params, x0, dt_obs, substeps, horizon, dim):
    params = np.ascontiguousarray(np.atleast_2d(params), dtype=np.float64)
    x0 = np.ascontiguousarray(x0, dtype=np.float64)
    if x0.shape != (dim,):
        raise ValueError(f"initial state must have length {dim}")
    out = np.empty((params.shape[0], int(horizon), dim))
    _rk4_trajectories(rhs_into, params, x0, float(dt_obs), int(substeps), int(horizon), out)
    return out


def lorenz63_trajectories(params, x0, dt_obs, substeps, horizon) -> np.ndarray:
    """States at ``dt_obs, 2 dt_obs, ...`` for each row of ``params`` (alpha, rho, beta).

    Returns shape ``(n, horizon, 3)``; rows that diverged are NaN from the
    first non-finite observation time onwards.
    """
    return _batched(_lorenz63_into, params, x0, dt_obs, substeps, horizon, 3)


def erk_trajectories(params, x0, dt_obs, substeps, horizon) -> np.ndarray:
    """ERK states at the observation times for each row of ``params`` (k1..k11)."""
    return _batched(_erk_into, params, x0, dt_obs, substeps, horizon, 11)
