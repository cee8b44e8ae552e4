"""Exception types raised across the package."""


class UceLabError(Exception):
    """Base class for all errors raised by ucelab."""


class CurveError(UceLabError, ValueError):
    """An unsupported curve configuration."""


class NotMonic(CurveError):
    pass


class RootAtZero(CurveError):
    pass


class RepeatedRoots(CurveError):
    pass


class UnsupportedCurve(CurveError):
    """The requested operation is not defined for this curve."""


class DivisibilityViolation(UceLabError, ArithmeticError):
    """An exact division that must succeed did not (an internal bug)."""


class OrderMismatch(UceLabError, ValueError):
    pass


class BadConstantTerm(UceLabError, ValueError):
    pass


class ZeroIndex(UceLabError, ValueError):
    pass


class SectorOutOfRange(UceLabError, ValueError):
    pass


class UnknownHypothesis(UceLabError, KeyError):
    pass


class NotPalindromic(UceLabError, ValueError):
    pass


class OddDegree(UceLabError, ValueError):
    pass


class ParseError(UceLabError, ValueError):
    """Malformed expression; ``position`` is the 0-based offset of the fault."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at offset {position}")


class NegativeUExponent(UceLabError, ValueError):
    pass
