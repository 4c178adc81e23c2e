"""Exception taxonomy shared across the toolkit."""


class SalemkitError(Exception):
    """Base class for all numerical / domain failures raised by salemkit."""


class PoleError(SalemkitError):
    """Evaluation requested at (or too close to) a pole of the function."""


class DomainError(SalemkitError):
    """Argument outside the domain an operation supports."""


class PrecisionError(SalemkitError):
    """Requested point lies outside the box where the target accuracy holds."""


class TruncationBudgetError(SalemkitError):
    """A series would need more terms than the configured hard cap."""


class NonrealResultError(SalemkitError):
    """A quantity that must be real came back with a large imaginary part."""


class SupportViolationError(SalemkitError):
    """Sampled function is not numerically supported inside its grid."""


class GridMismatchError(SalemkitError):
    """Two grid functions are not sampled compatibly."""


class ConventionError(SalemkitError):
    """Spectral data carries an unexpected transform-convention tag."""


class EdgeProximityError(SalemkitError):
    """Requested evaluation point is too close to the grid boundary."""


class NonconvergenceError(SalemkitError):
    """An iterative fit or adaptive quadrature failed to settle."""


class SpectrumUnboundedError(SalemkitError):
    """Input spectrum has no detectable lower cutoff where one is required."""


class ExcludedNodesError(SalemkitError):
    """Too many grid nodes had to be excluded from a quadrature."""


class ConfigError(SalemkitError):
    """Invalid run configuration (CLI exit code 2)."""
