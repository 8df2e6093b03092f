"""Exception hierarchy shared by every module of the package."""


class TribinError(ValueError):
    """Base class for all errors raised by :mod:`tribin`."""


class MalformedCodeError(TribinError):
    """A digit code or code string does not have a valid shape."""


class DigitRangeError(TribinError):
    """A digit lies outside ``{0, ..., s-1}``."""


class AlphabetMismatchError(TribinError):
    """Two objects that must share an alphabet do not."""


class WeightError(TribinError):
    """A weight vector is nonpositive or does not sum to one."""


class PartitionError(TribinError):
    """A digit partition is not an admissible split of the alphabet."""


class GuardExceededError(TribinError):
    """An exhaustive enumeration would exceed its hard size limit."""


class NotFoundError(TribinError):
    """A bounded search finished without finding what it looked for."""
