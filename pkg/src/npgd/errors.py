"""Exception hierarchy shared across the package.

Two broad branches: :class:`InputError` for bad arguments, malformed files
and inconsistent configuration (CLI exit code 2), and
:class:`NumericalError` for failures detected inside a computation
(CLI exit code 3). Verification failures are reported through suite
results and exit codes, not exceptions.
"""


class NpgdError(Exception):
    """Base class for all package errors."""


class InputError(NpgdError):
    """Invalid argument, shape mismatch or malformed input data."""


class ConfigError(InputError):
    """Invalid experiment configuration; message carries the field path."""


class IngestionError(InputError):
    """Dataset loading failed; message lists the offending row numbers."""


class DuplicatePointsError(IngestionError):
    """Two identical input points would make the Gram matrix singular."""


class NumericalError(NpgdError):
    """A numerical procedure failed or produced an inconsistent result."""


class SingularGramError(NumericalError):
    """Gram matrix is numerically singular; carries the smallest pivot."""

    def __init__(self, message: str, smallest_pivot: float):
        super().__init__(message)
        self.smallest_pivot = smallest_pivot


class LevelTooDeepError(NumericalError):
    """Requested preconditioner level has a non-positive tail eigenvalue."""

    def __init__(self, message: str, max_level: int):
        super().__init__(message)
        self.max_level = max_level


class NotPSDError(NumericalError):
    """Operator fed to a PSD-only routine has a negative eigenvalue."""


class UndefinedConditionError(NumericalError):
    """Condition number requested for the zero operator."""


class ConsistencyError(NumericalError):
    """An internal self-check failed (e.g. a self-adjoint operator whose
    orthonormal-basis representation is visibly asymmetric)."""


class StepSizeError(NumericalError):
    """Iteration diverged; the step size is too large for the spectrum."""


class EstimationError(NumericalError):
    """An iterative estimate (power iteration, Lanczos) did not converge."""
