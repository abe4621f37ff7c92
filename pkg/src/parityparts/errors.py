"""Exception types shared across the package."""


class PartitionError(Exception):
    """Base class for all package errors."""


class NonUnitConstantTerm(PartitionError):
    """Series inversion/division requires constant term +1 or -1."""


class NegativeExponent(PartitionError):
    """A sparse theta constructor produced a negative exponent."""


class OrderExceeded(PartitionError):
    """Requested coefficient index is at or beyond the truncation order."""


class IdentityMismatch(PartitionError):
    """Two representations that must agree coefficient-wise do not."""


class PrecisionUnderflow(PartitionError):
    """Working precision is insufficient for the requested evaluation."""


class QuadratureFailure(PartitionError):
    """Adaptive quadrature did not reach the requested tolerance."""
