"""Exception types shared across the package.

Each maps to a CLI exit code: ParseError -> 2, InvariantViolation -> 3,
BudgetExceeded -> 4.  The verification suite signals mismatches through its
exit code (1) rather than an exception.
"""


class ToricstabError(Exception):
    """Base class for all package errors."""


class ParseError(ToricstabError):
    """Malformed fan specification document."""


class InvariantViolation(ToricstabError):
    """Input violates a structural invariant (bad ray, incomplete fan, ...)."""


class BudgetExceeded(ToricstabError):
    """A lattice enumeration exceeded the configured point budget."""
