class BorromeanError(Exception):
    """Base class for all library errors."""


class DomainError(BorromeanError, ValueError):
    pass


class ConstraintError(BorromeanError, ValueError):
    pass


class ReducibleError(BorromeanError, ValueError):
    pass


class DegenerateError(BorromeanError, ArithmeticError):
    pass


class ExcludedHypersurfaceError(BorromeanError, ValueError):
    pass


class NotDivisible(BorromeanError, ArithmeticError):
    pass


class UnclassifiedError(BorromeanError, ValueError):
    pass


class MissingTheta(BorromeanError, ValueError):
    pass


class LabelMismatch(BorromeanError, ValueError):
    pass


class ZeroPolynomial(BorromeanError, ValueError):
    pass


class WordSyntaxError(BorromeanError, SyntaxError):
    def __init__(self, msg, text, pos):
        super().__init__(f"{msg} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos
