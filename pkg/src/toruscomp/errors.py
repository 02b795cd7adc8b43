"""Exception hierarchy shared by every module of the package."""


class TorusError(Exception):
    """Base class for all package errors."""


class ZeroInverse(TorusError, ZeroDivisionError):
    pass


class UndefinedPower(TorusError, ValueError):
    pass


class NotPrime(TorusError, ValueError):
    pass


class ReducibleModulus(TorusError, ValueError):
    pass


class NoRoot(TorusError, ValueError):
    pass


class NotADivisor(TorusError, ValueError):
    pass


class CoprimeViolation(TorusError, ValueError):
    pass


class NonInvertible(TorusError, ValueError):
    pass


class OutOfGoodLocus(TorusError):
    """The element lies outside the open set where compression is defined.

    ``kernel_dim`` is the dimension of the fiber system's kernel when that
    was the cause, otherwise ``None``.
    """

    def __init__(self, message, kernel_dim=None):
        super().__init__(message)
        self.kernel_dim = kernel_dim


class MalformedPayload(TorusError, ValueError):
    pass


class FactorizationError(TorusError, ValueError):
    pass
