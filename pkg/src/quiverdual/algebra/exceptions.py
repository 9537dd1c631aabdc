from typing import Any


class AlgebraException(Exception):
    pass


class DivisionByZero(AlgebraException, ZeroDivisionError):
    """A denominator evaluated to zero at the sampled point.

    The offending subexpression is kept on ``expression`` so callers can
    report it; the usual reaction is to resample the point.
    """

    def __init__(self, expression: Any, message: str = "denominator vanishes"):
        self.expression = expression
        super().__init__(f"{message}: {expression!r}")


class UnassignedVariableError(AlgebraException, KeyError):
    pass


class DegreeOverflow(AlgebraException):
    pass


class EvaluationExhausted(AlgebraException):
    """Every draw for one test point hit a pole.

    ``point_index`` and ``attempt`` locate the last draw; both are -1 when
    unknown.
    """

    def __init__(self, message: str, point_index: int = -1, attempt: int = -1):
        self.point_index = point_index
        self.attempt = attempt
        super().__init__(message)


class PoleResamplingWarning(UserWarning):
    pass
