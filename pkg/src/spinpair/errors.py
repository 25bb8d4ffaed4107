"""Exception types shared across the package."""


class SpinpairError(Exception):
    """Base class for all spinpair-specific errors."""


class NotHermitian(SpinpairError, ValueError):
    """Input matrix is not Hermitian within tolerance."""


class NotPositiveSemidefinite(SpinpairError, ValueError):
    """Hermitian input has an eigenvalue below the PSD clamp window."""


class InvalidDensityMatrix(SpinpairError, ValueError):
    """Matrix fails a density-matrix requirement; the message names it."""


class NumericalDefect(SpinpairError, ArithmeticError):
    """An internal consistency check failed by more than round-off allows."""


class ParseError(SpinpairError, ValueError):
    """Config text could not be parsed; message carries key and line number."""


class ValidationError(SpinpairError, ValueError):
    """A structurally valid value violates an invariant."""
