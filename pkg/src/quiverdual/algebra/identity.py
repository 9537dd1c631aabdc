"""Randomised exact checks of rational-function identities."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import TYPE_CHECKING, List, Sequence, Tuple

from quiverdual.algebra.expressions import Expr
from quiverdual.algebra.sampling import MAX_ATTEMPTS, evaluate_resampled
from quiverdual.parallelization.parallel_utils import parallelize

if TYPE_CHECKING:
    from quiverdual.localization.models import ModelShape

logger = logging.getLogger(__name__)

ExprPair = Tuple[Expr, Expr]


@dataclass(frozen=True)
class Witness:
    """Both sides of one identity at one sampled point."""

    point_index: int
    attempt: int
    lhs: Fraction
    rhs: Fraction
    assignment: Tuple[Tuple[str, str], ...] = ()

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class IdentityOutcome:
    witnesses: Tuple[Witness, ...]

    @property
    def passed(self) -> bool:
        return all(w.passed for w in self.witnesses)

    @property
    def failures(self) -> Tuple[Witness, ...]:
        return tuple(w for w in self.witnesses if not w.passed)


def _witness_row(
    point_index: int,
    pairs: Sequence[ExprPair],
    shape: "ModelShape",
    seed: int,
    max_attempts: int,
) -> List[Witness]:
    flat = [side for pair in pairs for side in pair]
    point, values = evaluate_resampled(flat, shape, seed, point_index, max_attempts)
    row = []
    for i in range(len(pairs)):
        lhs, rhs = values[2 * i], values[2 * i + 1]
        assignment: Tuple[Tuple[str, str], ...] = ()
        if lhs != rhs:
            assignment = tuple(point.as_strings().items())
        row.append(Witness(point_index, point.attempt, lhs, rhs, assignment))
    return row


def check_identities(
    pairs: Sequence[ExprPair],
    shape: "ModelShape",
    seed: int,
    points: int,
    num_jobs: int = 0,
    method: str = "threads",
    max_attempts: int = MAX_ATTEMPTS,
) -> List[IdentityOutcome]:
    """
    Compares each ``(lhs, rhs)`` pair exactly at ``points`` sampled points.

    All pairs are evaluated at the same points with a shared node cache, so
    expressions built from common subtrees are cheap to check together. A
    pole in any expression redraws the whole point.

    Args:
        pairs: Expressions expected to agree as rational functions.
        shape: Model shape supplying the variable registry.
        seed: Seed of the point stream.
        points: Number of points, at least 1.
        num_jobs: Worker count for `parallelize`; 0 runs serially.
        method: ``"threads"`` or ``"processes"``.
        max_attempts: Draw budget per point.

    Returns:
        One `IdentityOutcome` per pair, witnesses ordered by point index.

    Raises:
        EvaluationExhausted: If a point cannot avoid poles.
    """
    if points < 1:
        raise ValueError(f"At least one test point is needed, got {points}")
    if not pairs:
        return []
    try:
        rows = parallelize(
            partial(
                _witness_row,
                pairs=pairs,
                shape=shape,
                seed=seed,
                max_attempts=max_attempts,
            ),
            range(points),
            num_jobs=num_jobs,
            method=method,
        )
    except RuntimeError as e:
        # pooled runs wrap worker errors; surface the same type as serial runs
        if num_jobs > 0 and isinstance(e.__cause__, Exception):
            raise e.__cause__
        raise
    outcomes = [
        IdentityOutcome(tuple(row[i] for row in rows)) for i in range(len(pairs))
    ]
    failed = sum(not o.passed for o in outcomes)
    if failed:
        logger.info(
            "%d of %d identities failed on %d points", failed, len(pairs), points
        )
    return outcomes


def check_identity(
    lhs: Expr,
    rhs: Expr,
    shape: "ModelShape",
    seed: int,
    points: int,
    num_jobs: int = 0,
) -> IdentityOutcome:
    """Single-pair form of `check_identities`."""
    return check_identities([(lhs, rhs)], shape, seed, points, num_jobs=num_jobs)[0]
