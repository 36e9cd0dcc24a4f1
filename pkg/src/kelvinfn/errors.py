"""Exception types raised by the evaluation kernels.

Every domain violation raises a typed error instead of returning NaN or
infinity, so that dispatch logic higher up (order classification, reflection
formulas) cannot silently consume a value produced outside a kernel's
validity region.
"""


class KelvinError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(KelvinError):
    """Gamma or digamma evaluated at a nonpositive integer."""


class DenominatorPoleError(KelvinError):
    """A lower hypergeometric parameter is a nonpositive integer."""


class BranchError(KelvinError):
    """z^nu undefined: z = 0 with negative order."""


class ArgumentZeroError(KelvinError):
    """Macdonald function requested at z = 0."""


class OrderClassError(KelvinError):
    """Closed form evaluated at an excluded order (integer or half-integer)."""


class DomainError(KelvinError):
    """Argument outside the function's real domain (e.g. ker at x = 0)."""


class NegativeIntegerOrderError(KelvinError):
    """Integer-order finite sums are defined for n >= 0 only."""
