"""Exception hierarchy shared by every module.

The CLI prints ``type(exc).__name__`` so class names double as the
user-facing error identifiers.
"""


class LegendrianError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidInput(LegendrianError, ValueError):
    pass


class DivisionByZero(LegendrianError, ZeroDivisionError):
    pass


class Undefined(LegendrianError, ValueError):
    pass


class ConstantG(LegendrianError, ValueError):
    pass


class NotRepresentable(LegendrianError, ValueError):
    pass


class DegenerateCurve(LegendrianError, ValueError):
    pass


class HypothesisViolation(LegendrianError, ValueError):
    pass


class EmptyDomain(LegendrianError, ValueError):
    pass


class GridTooSmall(LegendrianError, ValueError):
    pass


class PoleOnSurface(LegendrianError, ValueError):
    pass


class ParseError(LegendrianError, ValueError):
    """Syntax error in an expression; ``pos`` is the 0-based column."""

    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class ExactnessViolation(LegendrianError, ValueError):
    """A 1-form has a nonzero residue, so it has no rational primitive.

    ``offenders`` is a list of ``(DomainPoint, residue)`` pairs.
    """

    def __init__(self, offenders):
        self.offenders = list(offenders)
        parts = ", ".join(f"{{pole {p}, residue {r}}}" for p, r in self.offenders)
        super().__init__(parts or "nonvanishing residue")
