"""Exception types raised across the package."""


class CompanionSmithError(ValueError):
    """Base class for all errors raised by this package."""


class NonMonicDivisor(CompanionSmithError):
    pass


class DivisionByZeroPolynomial(CompanionSmithError, ZeroDivisionError):
    pass


class OutOfRange(CompanionSmithError):
    pass


class NotSquare(CompanionSmithError):
    pass


class TooLarge(CompanionSmithError):
    pass


class InvalidDivisorChain(CompanionSmithError):
    pass


class AllZeroMatrix(CompanionSmithError):
    pass


class ResultantsNotCoprime(CompanionSmithError):
    """The coprime-resultant hypothesis of a splitting theorem does not hold."""


class NotCoprime(CompanionSmithError):
    pass


class ParseError(CompanionSmithError):
    """Malformed polynomial or matrix text.

    ``line`` and ``column`` are 1-based; either may be None when unknown.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
