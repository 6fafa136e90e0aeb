"""Exception types shared across the package."""


class InvalidConfigError(ValueError):
    """Raised for a malformed block configuration (n < 0, m < 0 or p < 1)."""


class GroundSetTooLargeError(ValueError):
    """Raised when an enumeration request exceeds the ground-set bound."""


class ConvergenceError(RuntimeError):
    """Raised when a numeric root search fails to converge."""
