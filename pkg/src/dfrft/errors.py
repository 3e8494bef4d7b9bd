"""Exception types shared across the package."""


class UsageError(ValueError):
    """An input violates a documented precondition (CLI exit code 2)."""


class NumericError(RuntimeError):
    """A numerical routine failed to converge or verify (CLI exit code 3)."""
