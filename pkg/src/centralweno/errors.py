"""Exception hierarchy.

Numerical failures derive from :class:`NumericalError` so the CLI can map
them to a single exit code.
"""


class NumericalError(RuntimeError):
    """Fatal numerical diagnostic raised during a solve."""


class NonFiniteState(NumericalError):
    """A NaN or Inf appeared in the solution."""

    def __init__(self, message: str, cell: tuple[int, ...] | None = None):
        super().__init__(message)
        self.cell = cell


class NonPhysicalState(NumericalError):
    """Non-positive density or pressure in a gas-dynamics state."""

    def __init__(self, message: str, cell: tuple[int, ...] | None = None):
        super().__init__(message)
        self.cell = cell


class ZeroMeanViolation(NumericalError):
    """Poisson right-hand side is incompatible with periodicity."""


class OutOfSmoothRegime(ValueError):
    """Exact solution requested past the breaking time."""


class MismatchedResolutions(ValueError):
    """Convergence table resolutions do not double."""


class ConfigError(ValueError):
    """Invalid experiment configuration."""
