"""Exception types shared by the numeric modules."""


class MalmstenError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(MalmstenError, ValueError):
    """An argument lies outside the domain of the requested function."""


class PoleError(DomainError):
    """The requested point is a pole (or otherwise non-removable singularity)."""


class PrecisionError(MalmstenError):
    """The requested accuracy cannot be reached at the configured precision."""


class ConvergenceError(MalmstenError):
    """An iterative algorithm failed to converge.

    ``partial`` carries the best value obtained before giving up.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
