"""Exception hierarchy shared across the package."""


class LogdivError(Exception):
    pass


class PolySyntaxError(LogdivError, ValueError):
    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}" + (f": {text!r}" if text else ""))


class UnknownVariableError(LogdivError, ValueError):
    pass


class Inconclusive(LogdivError):
    """A computation could not reach a certified answer (never a wrong one)."""


class ResourceLimitExceeded(Inconclusive):
    pass


class NotIsolatedError(Inconclusive):
    pass


class NotSingularError(LogdivError, ValueError):
    pass


class NotReducedError(LogdivError, ValueError):
    pass


class NonLogarithmicError(LogdivError, ValueError):
    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"candidate {index} is not logarithmic")
