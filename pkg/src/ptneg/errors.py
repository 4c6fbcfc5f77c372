"""Exception types raised across the package."""


class PtnegError(Exception):
    """Base class for all errors raised by :mod:`ptneg`."""


class NotHermitian(PtnegError, ValueError):
    pass


class ConvergenceFailure(PtnegError, RuntimeError):
    """Eigensolver hit its iteration cap.

    The best residual reached is kept on ``best_residual``.
    """

    def __init__(self, message, best_residual=float("nan")):
        super().__init__(message)
        self.best_residual = best_residual


class ComplexRootsDetected(PtnegError, ValueError):
    pass


class PreconditionViolated(PtnegError, ValueError):
    pass


class DimensionMismatch(PtnegError, ValueError):
    pass


class ZeroVector(PtnegError, ValueError):
    pass


class BadDimension(PtnegError, ValueError):
    pass


class ShapeMismatch(PtnegError, ValueError):
    pass


class BadEpsilon(PtnegError, ValueError):
    pass


class BadRank(PtnegError, ValueError):
    pass


class NotPositiveSemidefinite(PtnegError, ValueError):
    pass


class GridTooLarge(PtnegError, ValueError):
    pass


class InsufficientNegatives(PtnegError, ValueError):
    pass


class NonOrthonormalBasis(PtnegError, ValueError):
    pass
