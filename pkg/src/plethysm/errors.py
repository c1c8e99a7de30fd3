"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Arguments violate an operation's precondition (size mismatch, bad shape, ...)."""


class ConsistencyError(ArithmeticError):
    """An exact computation produced a value that theory says is impossible.

    Raised instead of rounding, e.g. a non-integral Schur coefficient or a
    rank defect in a basis that must be independent.
    """


class ResourceLimitError(RuntimeError):
    """The requested instance exceeds a configured size budget."""


class FitError(ValueError):
    """Quasi-polynomial fitting failed."""

    def __init__(self, message, *, tried=None):
        super().__init__(message)
        self.tried = tried


class InsufficientSamplesError(FitError):
    pass


class NoFitError(FitError):
    pass
