"""Exception types shared across the package."""


class SingularMatrixError(ValueError):
    """A matrix that must be symmetric positive definite is not."""


class UnphysicalStateError(ValueError):
    """A covariance matrix / displacement pair fails the physicality test."""


class MixedStateError(ValueError):
    """An operation that requires a pure Gaussian state got a mixed one."""
