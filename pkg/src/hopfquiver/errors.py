"""Exception types shared across the package."""


class HopfQuiverError(Exception):
    """Base class for input and structural errors."""


class ConductorMismatch(HopfQuiverError):
    pass


class InfiniteGroup(HopfQuiverError):
    pass


class BadArity(HopfQuiverError):
    pass


class IncompatibleQuiver(HopfQuiverError):
    pass


class ContextMismatch(HopfQuiverError):
    pass


class NotInvertible(HopfQuiverError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class UnsolvedPattern(HopfQuiverError):
    """Constraint system left equations outside the solver's patterns."""

    def __init__(self, message: str, residual=None):
        super().__init__(message)
        self.residual = residual or []


class InfiniteDimensional(HopfQuiverError):
    def __init__(self, message: str, generator=None):
        super().__init__(message)
        self.generator = generator


class NotConnected(HopfQuiverError):
    pass


class UnknownLetter(HopfQuiverError):
    pass


class ParseError(HopfQuiverError):
    pass


# exact-arithmetic division failures use the builtin
DivisionByZero = ZeroDivisionError
