"""Exception types shared across the package."""


class IFTopsisError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(IFTopsisError, ValueError):
    """A numeric argument lies outside its mathematical domain."""


class LengthMismatch(IFTopsisError, ValueError):
    """Two sequences that must be aligned have different lengths."""


class WeightError(IFTopsisError, ValueError):
    """A weight vector is non-positive or not normalized."""


class ConfigMismatch(IFTopsisError, ValueError):
    """A method was combined with inputs it does not accept.

    Raised, for example, when a method restricted to scalar weights
    receives IFV weights.  Distinct from WeightError so a front end can
    separate bad data (exit 2) from a bad method choice (exit 3).
    """


class DegenerateProblem(IFTopsisError, ArithmeticError):
    """A closeness ratio is undefined because both its terms vanish."""


class UnknownCheck(IFTopsisError, KeyError):
    """A reproduction check id is not present in the registry."""


class ProblemFormatError(IFTopsisError, ValueError):
    """A problem document failed to parse or validate.

    The message carries the source name and the location of the offending
    field so the user can find it.
    """
