"""Exception and warning types raised by the library."""


class DegenError(ValueError):
    """Base class for all library errors."""


class OrderMismatchError(DegenError):
    """Two truncated series with different truncation orders were combined."""


class NotInvertibleError(DegenError):
    """A series whose constant term is zero or non-constant was inverted."""


class TruncationError(DegenError):
    """A coefficient beyond the configured truncation order was requested."""


class SingularInputError(DegenError, ZeroDivisionError):
    """A ratio formula was evaluated where its denominator vanishes."""


class IndexRangeError(DegenError, IndexError):
    """Basis indices outside 0 <= k <= n."""


class UnknownIdentityError(DegenError, KeyError):
    pass


class InterpretationError(DegenError):
    """Missing or invalid interpretation tag for an identity."""


class VerificationInconsistency(AssertionError):
    """Numeric spot check disagreed with a symbolic PASS verdict."""


class OutOfSupportWarning(UserWarning):
    """A generating-function coefficient was requested outside its support."""
