"""Exception hierarchy shared by every module in the package."""


class EnkfSmcsError(Exception):
    """Base class for all package errors."""


class NotPositiveDefinite(EnkfSmcsError, ValueError):
    """Cholesky factorization failed even after the maximum jitter."""


class DegenerateEnsemble(EnkfSmcsError):
    """Ensemble carries too little effective information to continue.

    ``step`` is the observation index at which the failure occurred, or
    ``None`` outside a sequential run.
    """

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class NonFiniteState(EnkfSmcsError, FloatingPointError):
    """An ODE integration produced a non-finite state."""


class DomainError(EnkfSmcsError, ValueError):
    """A closed-form model was evaluated outside its domain."""


class ConfigError(EnkfSmcsError, ValueError):
    """Invalid experiment configuration; ``field`` names the offending key."""

    def __init__(self, message, field=None):
        if field is not None:
            message = f"{field}: {message}"
        super().__init__(message)
        self.field = field
