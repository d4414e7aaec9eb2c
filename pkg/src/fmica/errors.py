"""Exception and warning types shared across the package."""


class Error(Exception):
    """Base class for fmica errors."""


class InvalidInput(Error, ValueError):
    """Malformed or out-of-contract input (shapes, non-finite values, bad shapes/params)."""


class SingularCovariance(Error):
    """A covariance (or other SPD input) has an eigenvalue at or below the
    positive-definite floor; the full-rank model assumption is violated in-sample."""

    def __init__(self, message: str, eigenvalue: float | None = None):
        super().__init__(message)
        self.eigenvalue = eigenvalue


class DegenerateUpdate(Error):
    """A fixed-point update produced a rank-deficient matrix that cannot be
    orthogonalized."""


class MaxIterExceeded(Error):
    """An iterative estimator ran out of iterations (and restarts).

    Carries the best-so-far estimate with ``converged=False`` so callers can
    still inspect or emit it.
    """

    def __init__(self, message: str, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class BothGaussian(Error):
    """An asymptotic-variance formula was requested for a pair with both excess
    kurtoses zero, where no fourth-moment method is defined."""


class AmbiguousAlignment(Error):
    """Gain-matrix alignment found two competing assignments of nearly equal
    magnitude; the permutation is not identifiable."""


class EigGapWarning(UserWarning):
    """Two eigenvalues of the kurtosis matrix are nearly equal; the eigenvector
    basis (and hence FOBI) is ill-determined."""


class NearZeroKurtosisWarning(UserWarning):
    """A component extracted before the last has near-zero excess kurtosis; its
    asymptotic variance is unbounded."""


class ZeroKurtosisSignWarning(UserWarning):
    """The empirical kurtosis sign of a component is too close to zero to be
    stable; it was treated as positive."""
