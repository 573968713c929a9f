"""Exception types shared by the numerical modules and the CLI."""


class DomainError(ValueError):
    """Argument outside the domain where the quantity is defined or certified."""


class PoleError(DomainError):
    """Evaluation point too close to a pole of the requested expression."""


class ConvergenceError(ArithmeticError):
    """An iteration failed to converge.

    ``bracket`` carries the last known enclosing interval, when there is one.
    """

    def __init__(self, message, bracket=None):
        super().__init__(message)
        self.bracket = bracket


class ResourceError(RuntimeError):
    """The requested accuracy needs more work than the configured limits allow."""
