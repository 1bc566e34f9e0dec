"""Exception types shared across the package."""


class NumericalFailureError(RuntimeError):
    """A numerical procedure failed its accuracy contract.

    Raised when quadrature does not converge, a truncated series has a
    tail bound above tolerance, or probabilities violate consistency
    bounds.  Maps to CLI exit code 3.
    """


class InsufficientDataError(ValueError):
    """A statistic was requested from too few samples."""
