"""Exception types.

Everything raised on purpose by the library derives from :class:`ZmaxError`.
:class:`PreconditionError` marks inputs that are well formed but violate a
mathematical hypothesis of the operation (the CLI maps these to exit code 3).
"""


class ZmaxError(Exception):
    pass


class DimensionMismatch(ZmaxError, ValueError):
    pass


class InvalidOrder(ZmaxError, ValueError):
    """An order specification that does not define a translation-invariant order."""


class DivisionByZero(ZmaxError, ZeroDivisionError):
    pass


class UndefinedPower(ZmaxError, ValueError):
    """Raised for 0**0, which is deliberately left undefined."""


class PreconditionError(ZmaxError):
    pass


class NonInjectiveEmbedding(PreconditionError, ValueError):
    pass


class OrderIncompatible(PreconditionError, ValueError):
    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class ZeroGenerator(PreconditionError, ValueError):
    pass


class NotConvex(PreconditionError):
    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class ConvexityUndecided(PreconditionError):
    def __init__(self, message, bound):
        super().__init__(message)
        self.bound = bound


class UnsupportedQuotientShape(PreconditionError):
    pass


class SearchExhausted(PreconditionError):
    """A bounded search ran out of window before finding a witness."""

    def __init__(self, message, bound):
        super().__init__(message)
        self.bound = bound


class InfiniteUnitIndex(PreconditionError):
    pass


class BaseNotZmax(PreconditionError):
    pass


class NotSelective(PreconditionError):
    pass


class NotASubextension(PreconditionError):
    pass


class AdditionLawViolation(ZmaxError):
    """v^a + v^b != v^max(a, b) inside a classification run.

    For a genuine extension this cannot happen; seeing it means the input
    embedding was not order compatible.
    """

    def __init__(self, a, b):
        super().__init__(f"addition law fails for exponents a={a}, b={b}")
        self.a = a
        self.b = b
