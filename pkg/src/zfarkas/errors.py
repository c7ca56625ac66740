"""Exception types shared across the package."""


class ZFarkasError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(ZFarkasError, ValueError):
    """Vector or matrix shapes do not agree."""


class DomainError(ZFarkasError, ValueError):
    """An argument lies outside the domain of the operation (zero vector, not in span, ...)."""


class PreconditionError(ZFarkasError, ValueError):
    """A structural precondition failed (columns not Farkas-related, graph disconnected, ...)."""


class BudgetExceeded(ZFarkasError, RuntimeError):
    """An exhaustive search would exceed its configured budget."""
