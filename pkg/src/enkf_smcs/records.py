"""Per-step diagnostics emitted by every inference driver."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from .gaussmath import weighted_moments


@dataclass(frozen=True)
class RunRecord:
    t: int
    mean: np.ndarray
    std: np.ndarray
    bias: Optional[np.ndarray]
    ess: float
    refined: bool
    resampled: bool
    model_evals: int
    wall_time: float


@dataclass
class RunResult:
    """Everything a driver returns: the records plus the final ensemble."""

    algorithm: str
    records: List[RunRecord]
    xs: np.ndarray
    log_weights: np.ndarray
    refinement_steps: List[int] = field(default_factory=list)
    resampling_steps: List[int] = field(default_factory=list)
    degenerate_steps: List[int] = field(default_factory=list)
    trace: Optional[list] = None

    @property
    def final(self) -> RunRecord:
        return self.records[-1]

    @property
    def model_evals(self) -> int:
        return self.records[-1].model_evals if self.records else 0


def summarize(xs, weights, truth=None):
    """Weighted mean, weighted std (reliability-corrected) and bias."""
    mean, cov, _ = weighted_moments(xs, weights)
    std = np.sqrt(np.clip(np.diag(cov), 0.0, None))
    bias = None if truth is None else mean - np.asarray(truth, dtype=float)
    return mean, std, bias
