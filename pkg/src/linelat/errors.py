"""Exception types shared across the package."""


class LinelatError(Exception):
    """Base class for all package errors."""


class InputError(LinelatError):
    """Invalid argument or graph violating an operation's preconditions."""


class ParseError(InputError):
    """Malformed input file."""


class DenseCapError(LinelatError):
    """Matrix dimension exceeds the dense-solver cap.

    Use extremal_eigenvalues for matrices of this size.
    """


class ConvergenceError(LinelatError):
    """Iterative solver or fit failed to converge.

    Carries the best iterate found so far in ``best``.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class BudgetError(LinelatError):
    """A size/work budget would be exceeded."""
