"""Exception hierarchy shared by every module of the package."""


class RainbowRadoError(Exception):
    """Base class for all package errors."""


class EquationError(RainbowRadoError, ValueError):
    """Raised for malformed or unsupported equation input."""


class EquationSyntaxError(EquationError):
    """The equation text does not match the grammar.

    ``pos`` is the character offset of the offending token and
    ``expected`` a short description of what the parser wanted there.
    """

    def __init__(self, message, pos=None, expected=None):
        self.pos = pos
        self.expected = expected
        if pos is not None:
            message = f"{message} at position {pos}"
        if expected:
            message = f"{message} (expected {expected})"
        super().__init__(message)


class UnsupportedForm(EquationError):
    """Grammatically valid text outside the two supported equation families."""


class NotIncreasing(EquationError):
    """Binary-function polynomial with no positive non-constant coefficient."""


class FixedPointDomain(EquationError):
    """f(1) = 1 and f(2) < 3, so no valid domain floor exists."""


class DomainError(RainbowRadoError, ValueError):
    """Argument lies below the equation's domain floor."""


class ArityCapExceeded(RainbowRadoError, ValueError):
    """General-linear equation has more variables than the enumeration cap."""


class GapError(RainbowRadoError, ValueError):
    """A coloring assignment leaves some element of [n] uncolored."""


class RangeError(RainbowRadoError, ValueError):
    """Numeric precondition on n violated (e.g. n < a + b)."""


class BudgetExceeded(RainbowRadoError, RuntimeError):
    """A search exhausted its node budget before finishing."""

    def __init__(self, message, nodes=None):
        self.nodes = nodes
        super().__init__(message)


class UnsupportedRainbowEquation(RainbowRadoError, ValueError):
    """Gallai-Rado dispatch only handles rainbow equations y=x and y=x+b."""
