"""Package-level exception types."""


class ConvergenceError(RuntimeError):
    """A quadrature or eigensolve did not reach its requested tolerance."""

    def __init__(self, message, achieved=None, requested=None):
        super().__init__(message)
        self.achieved = achieved
        self.requested = requested


class SamplingError(RuntimeError):
    """A rejection sampler exhausted its iteration budget."""

    def __init__(self, message, tries=None, diagnostics=None):
        super().__init__(message)
        self.tries = tries
        self.diagnostics = diagnostics or {}


class UnboundedDomainError(ValueError):
    """Operation requires a bounded domain."""
