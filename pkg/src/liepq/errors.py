"""Exception taxonomy shared by all modules."""


class LiepqError(Exception):
    """Base class for every error raised by this package."""


class ShapeMismatchError(LiepqError):
    """Operands have incompatible dimensions."""


class ContractError(LiepqError):
    """A documented precondition was violated by the caller."""


class NotClosedError(LiepqError):
    """A matrix basis is not closed under commutators."""


class NotStableError(LiepqError):
    """A linear operation left the exact span of a fixed basis."""


class UnknownSmallestModuleError(LiepqError):
    """Smallest-module dimension is not covered by the built-in table."""


class UnsupportedRealizationError(LiepqError):
    """Operation requires a realization the algebra does not have."""


class FactorizationCapExceeded(LiepqError):
    """Polynomial factorization gave up (degree or divisor cap)."""
