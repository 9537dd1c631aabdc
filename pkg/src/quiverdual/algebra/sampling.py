"""Deterministic random rational points for identity testing."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Dict, List, Mapping, Sequence, Tuple

import numpy as np

from quiverdual.algebra.exceptions import (
    DivisionByZero,
    EvaluationExhausted,
    PoleResamplingWarning,
)
from quiverdual.algebra.expressions import Expr, evaluate_many
from quiverdual.algebra.variables import Var, registry
from quiverdual.reporting.log_utils import warn_and_log

if TYPE_CHECKING:
    from quiverdual.localization.models import ModelShape

logger = logging.getLogger(__name__)

NUMERATOR_BOUND = 10**6
DENOMINATOR_BOUND = 10**3
MAX_ATTEMPTS = 100
RESAMPLING_WARN_AFTER = 10


@dataclass(frozen=True, eq=False)
class Point:
    """Total assignment of registry symbols to rationals."""

    values: Mapping[Var, Fraction]
    seed: int = 0
    attempt: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", dict(self.values))

    def __getitem__(self, var: Var) -> Fraction:
        return self.values[var]

    def as_strings(self) -> Dict[str, str]:
        return {var.name: str(value) for var, value in sorted(self.values.items())}


def _entropy(shape: "ModelShape", seed: int, attempt: int) -> List[int]:
    return [abs(seed), int(seed < 0), attempt, shape.m, shape.n, shape.r]


def random_point(shape: "ModelShape", seed: int, attempt: int = 0) -> Point:
    """
    Draws the ``attempt``-th point of the stream identified by ``seed``.

    The point is a pure function of (shape, seed, attempt). Every registry
    symbol gets p/q with |p| <= 10**6 and 1 <= q <= 10**3.

    Args:
        shape: Supplies the registry x_1..x_m, z_1..z_n, z.
        seed: Stream identifier; any integer.
        attempt: Non-negative draw index.

    Returns:
        Point: The sampled assignment.
    """
    if attempt < 0:
        raise ValueError(f"attempt must be non-negative, got {attempt}")
    rng = np.random.default_rng(np.random.SeedSequence(_entropy(shape, seed, attempt)))
    values: Dict[Var, Fraction] = {}
    for var in registry(shape.m, shape.n):
        numerator = int(rng.integers(-NUMERATOR_BOUND, NUMERATOR_BOUND, endpoint=True))
        denominator = int(rng.integers(1, DENOMINATOR_BOUND, endpoint=True))
        values[var] = Fraction(numerator, denominator)
    return Point(values=values, seed=seed, attempt=attempt)


def evaluate_resampled(
    exprs: Sequence[Expr],
    shape: "ModelShape",
    seed: int,
    point_index: int,
    max_attempts: int = MAX_ATTEMPTS,
) -> Tuple[Point, Tuple[Fraction, ...]]:
    """
    Evaluates ``exprs`` at the ``point_index``-th test point, drawing a new
    point whenever one of them hits a pole.

    Point ``k`` uses attempts ``k * max_attempts`` onwards, so distinct
    point indices never share a draw.

    Raises:
        EvaluationExhausted: If ``max_attempts`` consecutive draws hit poles.
    """
    first = point_index * max_attempts
    last_pole = None
    for attempt in range(first, first + max_attempts):
        point = random_point(shape, seed, attempt)
        try:
            return point, evaluate_many(exprs, point)
        except DivisionByZero as pole:
            last_pole = pole
            logger.debug(
                "Pole at point %d (attempt %d): %s", point_index, attempt, pole
            )
            if attempt - first + 1 == RESAMPLING_WARN_AFTER:
                warn_and_log(
                    f"Point {point_index} hit a pole in {RESAMPLING_WARN_AFTER} "
                    "consecutive draws; the identity may have a pole of its own",
                    PoleResamplingWarning,
                )
    raise EvaluationExhausted(
        f"Point {point_index} hit a pole in {max_attempts} consecutive draws "
        f"(last: {last_pole})",
        point_index=point_index,
        attempt=first + max_attempts - 1,
    )
