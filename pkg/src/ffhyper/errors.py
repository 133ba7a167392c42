"""Exception types raised across the package."""


class FFHyperError(Exception):
    """Base class for every error raised by ffhyper."""


class NotPrime(FFHyperError, ValueError):
    pass


class NotPrimePower(FFHyperError, ValueError):
    pass


class BoundExceeded(FFHyperError, ValueError):
    pass


class DivisionByZero(FFHyperError, ZeroDivisionError):
    pass


class LogOfZero(FFHyperError, ValueError):
    pass


class ConductorMismatch(FFHyperError, ValueError):
    pass


class NotDivisible(FFHyperError, ValueError):
    pass


class ZeroArgument(FFHyperError, ValueError):
    """Katz's sum is only defined for a nonzero argument."""


class EvenCharacteristic(FFHyperError, ValueError):
    """Raised when an operation needs the quadratic character but q is even."""


class NotOddPrime(FFHyperError, ValueError):
    pass


class UnknownTheorem(FFHyperError, KeyError):
    pass
