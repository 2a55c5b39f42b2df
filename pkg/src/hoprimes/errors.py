"""Exception types shared across the package."""


class HOPrimesError(Exception):
    """Base class for package errors."""


class ArgumentError(HOPrimesError, ValueError):
    """An argument is outside the operation's domain (e.g. a non-prime)."""


class ResourceLimitError(HOPrimesError):
    """A request would push the sieve past its configured maximum bound."""
