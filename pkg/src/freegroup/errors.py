"""Exception hierarchy shared by every module of the package."""


class FreeGroupError(Exception):
    """Base class for all errors raised by :mod:`freegroup`."""


class InvalidSymbolError(FreeGroupError, ValueError):
    """A generator id below 1, or a zero exponent where one is forbidden."""


class ExponentOverflowError(FreeGroupError, OverflowError):
    """An exponent left the signed 64-bit range."""


class RecyclingError(FreeGroupError, ValueError):
    """Operand lengths that cannot be recycled against each other."""


class AlphabetError(FreeGroupError, ValueError):
    """Invalid alphabet names, or a symbol the alphabet cannot display."""


class ParseError(FreeGroupError, ValueError):
    """Malformed input text; ``position`` is a 0-based offset when known."""

    def __init__(self, message, position=None):
        self.message = message
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class EvaluationError(FreeGroupError, ValueError):
    """An expression parsed but could not be evaluated (unbound name, type misuse)."""


class RandomSpecError(FreeGroupError, ValueError):
    """Invalid parameters for random word generation."""
