"""salemkit: numerical realization and cross-validation of a divisor-series
kernel, its Mellin/Fourier symbol, the associated convolution operator, and
spectral-support / log-integrability criteria.

Every quantity is computed by at least two independent routes where the
underlying identities allow it; ``VerificationEntry`` records each comparison
with its measured error and tolerance.
"""

__version__ = "0.1.0"

from . import core  # noqa: F401

__all__ = ["core", "__version__"]
