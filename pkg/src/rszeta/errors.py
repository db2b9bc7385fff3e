"""Shared exception types; the CLI maps these onto exit codes."""


class DomainError(ValueError):
    """Argument outside the range an operation supports."""


class PrecisionError(ValueError):
    """Requested accuracy is unreachable at the configured precision."""


class ConvergenceError(RuntimeError):
    """A self-check (grid doubling, refinement) failed to converge."""


class CompletenessError(RuntimeError):
    """A zero scan could not account for the expected count."""


class TruncationWarning(UserWarning):
    """Quadrature truncation bound exceeds the quality target."""
