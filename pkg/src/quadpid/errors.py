"""Exception hierarchy shared by every module.

Each error names a broken precondition or a mathematically negative outcome.
The CLI maps :class:`QuadError` subclasses to exit code 2, except the few
listed in ``NEGATIVE_OUTCOMES`` which map to exit code 1.
"""


class QuadError(Exception):
    """Base class for all quadpid errors."""


class NotSquarefree(QuadError, ValueError):
    pass


class DegenerateM(QuadError, ValueError):
    pass


class NotIntegral(QuadError, ValueError):
    pass


class FieldMismatch(QuadError, ValueError):
    pass


class DivisorZero(QuadError, ZeroDivisionError):
    pass


class NotDivisible(QuadError, ArithmeticError):
    pass


class BothZero(QuadError, ValueError):
    pass


class GcdNotOne(QuadError, ValueError):
    pass


class ParityUnfixable(QuadError, ValueError):
    pass


class NotPrime(QuadError, ValueError):
    pass


class NotReduced(QuadError, ValueError):
    pass


class XiIntegral(QuadError, ValueError):
    pass


class DividesAlpha(QuadError, ValueError):
    pass


class TableIncomplete(QuadError):
    def __init__(self, p, m):
        super().__init__(f"no element of norm +-{p} available for m={m}")
        self.p = p
        self.m = m


class InternalContradiction(QuadError, AssertionError):
    pass


class NoSquareRoot(QuadError):
    pass


class NormMismatch(QuadError, AssertionError):
    pass


class SearchCapExceeded(QuadError):
    pass


class ParseError(QuadError, ValueError):
    pass


NEGATIVE_OUTCOMES = (NoSquareRoot,)
