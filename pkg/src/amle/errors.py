"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where the operation is defined."""


class UnsupportedCapability(NotImplementedError):
    """The model does not provide the requested capability."""


class QuadratureError(ArithmeticError):
    """Adaptive quadrature did not reach the requested tolerance."""

    def __init__(self, message, estimate, error):
        super().__init__(f"{message} (estimate={estimate!r}, error bound={error!r})")
        self.estimate = estimate
        self.error = error


class TruncationBreakdown(ArithmeticError):
    """The truncated expansion sum is not positive, so its log is undefined."""

    def __init__(self, partial_sum):
        super().__init__(f"truncated expansion sum is non-positive: {partial_sum!r}")
        self.partial_sum = partial_sum


class ConvergenceError(ArithmeticError):
    """An iterative solver failed to converge."""


class ConfigError(ValueError):
    """An experiment configuration is malformed."""
