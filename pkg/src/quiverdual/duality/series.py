from dataclasses import dataclass, replace
from typing import Tuple

from quiverdual.algebra.expressions import ZERO, Expr, product, total
from quiverdual.duality.exceptions import TruncationTooSmall
from quiverdual.duality.kernels import Kernel
from quiverdual.hypergeometric.base_models import Model
from quiverdual.localization.models import BetaClass, FixedPoint


@dataclass(frozen=True)
class PerBetaSeries:
    """
    Truncated Laurent series in q1 at a fixed beta.

    ``coefficients[a]`` multiplies q1^{offset + a}. Exponents below the
    offset have coefficient 0; exponents past ``offset + order`` are
    unknown and asking for them raises `TruncationTooSmall`.
    """

    model: Model
    fixed_point: FixedPoint
    beta: BetaClass
    offset: int
    coefficients: Tuple[Expr, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, exponent: int) -> Expr:
        a = exponent - self.offset
        if a < 0:
            return ZERO
        if a > self.order:
            raise TruncationTooSmall(
                f"q1^{exponent} lies beyond the truncation order {self.order} "
                f"of a series starting at q1^{self.offset}"
            )
        return self.coefficients[a]

    def shifted(self, delta: int) -> "PerBetaSeries":
        return replace(self, offset=self.offset + delta)

    def times(self, kernel: Kernel) -> "PerBetaSeries":
        """Product with a kernel series, truncated at the smaller order."""
        if kernel.order < self.order:
            raise TruncationTooSmall(
                f"Kernel order {kernel.order} below series order {self.order}"
            )
        coefficients = tuple(
            total(
                product((kernel[p], self.coefficients[a - p])) for p in range(a + 1)
            )
            for a in range(self.order + 1)
        )
        return replace(self, coefficients=coefficients)
