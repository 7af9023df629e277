"""Exception hierarchy.

Every error raised by the library derives from :class:`HodgeError`, which
itself is a ``ValueError`` so callers that only care about bad input can
catch the builtin.
"""


class HodgeError(ValueError):
    pass


class NonUnitLeadingCoefficient(HodgeError):
    """Series division by a series whose leading tau-polynomial is not a monomial."""


class NonPositiveValuation(HodgeError):
    """Exponential of a series carrying a term at lambda-exponent <= 0."""


class SizeMismatch(HodgeError):
    pass


class EmptyPartition(HodgeError):
    pass


class EmptyKeyPresent(HodgeError):
    pass


class BadConstantTerm(HodgeError):
    pass


class NegativeR(HodgeError):
    """Euler characteristic too large: the number of simple branch points is negative."""


class TooLarge(HodgeError):
    """Brute-force enumeration requested beyond the configured bounds."""


class BothEmpty(HodgeError):
    pass


class ZeroTau0(HodgeError):
    pass


class OutOfRange(HodgeError):
    """Requested coefficient lies outside the computed truncation window."""


class InsufficientOrder(HodgeError):
    pass
