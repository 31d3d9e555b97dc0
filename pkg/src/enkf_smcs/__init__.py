"""Sequential Bayesian parameter estimation with EnKF-driven SMC samplers.

``run`` dispatches on :class:`SmcsConfig.algorithm`: ``enkf_smcs`` (exact
weights every step), ``enkf_smcs_wr`` (approximate weights with occasional
refinement) or ``enkf_only`` (the stochastic EnKF baseline).
"""
from .enkf import enkf_run
from .exceptions import (
    ConfigError,
    DegenerateEnsemble,
    DomainError,
    EnkfSmcsError,
    NonFiniteState,
    NotPositiveDefinite,
)
from .experiments import ExperimentConfig, compare, load_config, load_preset, simulate
from .model import (
    BernoulliModel,
    ERKModel,
    LinearGaussianModel,
    Lorenz63Model,
    ObservationRecord,
    PriorSpec,
    simulate_observations,
)
from .records import RunRecord, RunResult
from .smcs import SmcsConfig, run, run_enkf_smcs, run_enkf_smcs_wr

__all__ = [
    "BernoulliModel",
    "ConfigError",
    "DegenerateEnsemble",
    "DomainError",
    "ERKModel",
    "EnkfSmcsError",
    "ExperimentConfig",
    "LinearGaussianModel",
    "Lorenz63Model",
    "NonFiniteState",
    "NotPositiveDefinite",
    "ObservationRecord",
    "PriorSpec",
    "RunRecord",
    "RunResult",
    "SmcsConfig",
    "compare",
    "enkf_run",
    "load_config",
    "load_preset",
    "run",
    "run_enkf_smcs",
    "run_enkf_smcs_wr",
    "simulate",
    "simulate_observations",
]
