"""Exception types shared across the package."""


class SolverRefusal(Exception):
    """A solver declined to run because a configured size limit was exceeded.

    Carries enough context to tell the caller which knob to turn.
    """

    def __init__(self, message, *, limit=None, measured=None, report=None):
        super().__init__(message)
        self.limit = limit
        self.measured = measured
        self.report = report


class CrossValidationError(Exception):
    """Two solvers disagreed on the exact optimum of the same instance."""


class ParseError(ValueError):
    """Malformed instance text; ``line`` is the 1-based source line."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
