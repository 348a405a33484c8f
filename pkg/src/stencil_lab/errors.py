"""Exception types shared across the toolkit."""


class StencilLabError(Exception):
    """Base class for all toolkit errors."""


class ConfigurationError(StencilLabError):
    """Raised for invalid user-supplied parameters or config files."""


class SingularStencilError(StencilLabError):
    """Local weight system is singular or nearly so.

    Carries the offending node index (when known) and the 1-norm condition
    estimate of the saddle matrix.
    """

    def __init__(self, message, node=None, cond=None):
        super().__init__(message)
        self.node = node
        self.cond = cond


class SingularSystemError(StencilLabError):
    """Global sparse factorization failed."""


class IterativeSolveError(StencilLabError):
    """Iterative solver did not reach the requested tolerance."""

    def __init__(self, message, iterations=None, residual=None):
        super().__init__(message)
        self.iterations = iterations
        self.residual = residual
