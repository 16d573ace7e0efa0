"""Exception types shared across the package."""


class ToricFlowError(Exception):
    """Base class for all errors raised by toricflow."""


class InvalidDimensionError(ToricFlowError, ValueError):
    pass


class InvalidInputError(ToricFlowError, ValueError):
    pass


class DimensionMismatchError(ToricFlowError, ValueError):
    pass


class ResourceError(ToricFlowError):
    """An enumeration would exceed the configured size cap."""


class DegenerateBinomialError(ToricFlowError, ValueError):
    pass


class OrderError(ToricFlowError):
    """A term order could not be certified as a well-order for the ideal."""


class InvalidBasisError(ToricFlowError):
    pass


class InvalidFlipError(ToricFlowError):
    pass


class InfeasibleError(ToricFlowError):
    """No nonnegative integral flow meets the supplies.

    ``prefix`` is the first k with b_1 + ... + b_k < 0 (or None when the
    supplies simply do not sum to zero).
    """

    def __init__(self, message, prefix=None):
        super().__init__(message)
        self.prefix = prefix


class ConsistencyError(ToricFlowError):
    """An internally generated object failed its own validation."""
