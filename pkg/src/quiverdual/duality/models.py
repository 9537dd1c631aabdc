from enum import Enum

from quiverdual.duality.exceptions import CaseMismatch
from quiverdual.localization.models import ModelShape


class Case(str, Enum):
    """Regimes of the duality, by the gap m - n."""

    GEQ2 = "geq2"
    PLUS1 = "plus1"
    EQUAL = "equal"

    def check_shape(self, shape: ModelShape) -> None:
        if case_for(shape) is not self:
            raise CaseMismatch(
                f"Shape {shape} belongs to case {case_for(shape).value}, "
                f"not {self.value}"
            )


def case_for(shape: ModelShape) -> Case:
    gap = shape.m - shape.n
    if gap >= 2:
        return Case.GEQ2
    if gap == 1:
        return Case.PLUS1
    return Case.EQUAL


class KernelKind(str, Enum):
    NONE = "none"
    EXP = "exp"
    BINOM = "binom"


KERNEL_FOR_CASE = {
    Case.GEQ2: KernelKind.NONE,
    Case.PLUS1: KernelKind.EXP,
    Case.EQUAL: KernelKind.BINOM,
}
