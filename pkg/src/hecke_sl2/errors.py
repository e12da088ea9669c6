"""Exception types shared across the package."""


class InvalidParameter(ValueError):
    """A structurally invalid parameter (non-prime p, digit out of range, ...)."""


class InsufficientPrecision(ArithmeticError):
    """A truncated-series computation could not be decided at the tracked precision.

    Raised whenever a value whose tracked coefficient window is identically
    zero cannot be proven to be zero, or a coefficient outside the window is
    needed.  Callers are expected to retry at higher working precision; the
    error is never absorbed silently.
    """


class CheckFailed(Exception):
    """A verification predicate failed; carries a machine-readable witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ConstructionFailed(CheckFailed):
    """Inductive basis construction hit a dependent family (checker/bug mismatch)."""


class BudgetExhausted(RuntimeError):
    """Rejection sampling ran out of attempts."""
