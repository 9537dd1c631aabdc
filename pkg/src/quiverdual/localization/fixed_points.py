"""
Torus-fixed points of Gr(r, E) and Gr(s, E^vee) and their bookkeeping.

A fixed point on the Grassmannian side is an r-subset i of [m]; the tangent
Chern roots restrict as y_k -> x_{i_k}. On the dual side it is an s-subset
j and w_k -> -x_{j_k}. Complementation exchanges the two sides, and every
fixed point can be moved to the standard one by relabelling [m].
"""
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple

from quiverdual.algebra.expressions import Expr, x
from quiverdual.algebra.variables import Var, VarKind
from quiverdual.localization.exceptions import IndexOutOfRange, InvalidFixedPoint
from quiverdual.localization.models import FixedPoint, ModelShape, Side


@dataclass(frozen=True)
class IndexPermutation:
    """Permutation sigma of [m] stored by images: sigma(i) = images[i - 1]."""

    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"Not a permutation of [m]: {self.images}")

    def __call__(self, index: int) -> int:
        return self.images[index - 1]

    @property
    def order(self) -> Tuple[int, ...]:
        """Original index sitting at each standard position: sigma^{-1}(1..m)."""
        return self.inverse().images

    def inverse(self) -> "IndexPermutation":
        inverse = [0] * len(self.images)
        for source, image in enumerate(self.images, start=1):
            inverse[image - 1] = source
        return IndexPermutation(tuple(inverse))


def fixed_points(shape: ModelShape, side: Side) -> List[FixedPoint]:
    """All fixed points of one side in lexicographic order."""
    return [
        FixedPoint(indices=indices, side=side)
        for indices in itertools.combinations(range(1, shape.m + 1), shape.rank(side))
    ]


def standard_fixed_point(shape: ModelShape, side: Side) -> FixedPoint:
    """{1..r} on the Grassmannian side, {r+1..m} on the dual side."""
    if side is Side.GRASSMANNIAN:
        return FixedPoint(indices=tuple(range(1, shape.r + 1)), side=side)
    return FixedPoint(indices=tuple(range(shape.r + 1, shape.m + 1)), side=side)


def complement(fp: FixedPoint, m: int) -> FixedPoint:
    """
    The complementary subset of [m], on the opposite side.

    Raises:
        IndexOutOfRange: If ``fp`` has an index above m or covers all of [m].
    """
    if fp.indices[-1] > m:
        raise IndexOutOfRange(f"Fixed point {fp.indices} does not fit in [{m}]")
    rest = tuple(i for i in range(1, m + 1) if i not in fp.indices)
    if not rest:
        raise IndexOutOfRange(f"Fixed point {fp.indices} has empty complement")
    return FixedPoint(indices=rest, side=fp.side.opposite)


def _position(fp: FixedPoint, k: int) -> int:
    if not 1 <= k <= len(fp.indices):
        raise IndexOutOfRange(f"Root index {k} outside 1..{len(fp.indices)}")
    return fp.indices[k - 1]


def restrict_y(fp: FixedPoint, k: int) -> Expr:
    """Restriction of the k-th tangent root y_k at a Grassmannian fixed point."""
    if fp.side is not Side.GRASSMANNIAN:
        raise InvalidFixedPoint("y-roots restrict at Grassmannian-side fixed points")
    return x(_position(fp, k))


def restrict_w(fp: FixedPoint, k: int) -> Expr:
    """Restriction of the k-th dual root w_k at a dual fixed point: -x_{j_k}."""
    if fp.side is not Side.DUAL:
        raise InvalidFixedPoint("w-roots restrict at dual-side fixed points")
    return -x(_position(fp, k))


def permute_to_standard(fp: FixedPoint, m: int) -> IndexPermutation:
    """
    The permutation of [m] carrying ``fp`` to the standard fixed point.

    Grassmannian side: i goes onto {1..r} and its complement onto
    {r+1..m}, both in increasing order. Dual side: j goes onto {r+1..m}.
    """
    other = complement(fp, m).indices
    if fp.side is Side.GRASSMANNIAN:
        order = fp.indices + other
    else:
        order = other + fp.indices
    return IndexPermutation(order).inverse()


def permute_assignment(
    values: Mapping[Var, Fraction], permutation: IndexPermutation
) -> Dict[Var, Fraction]:
    """
    Relabels the x-values so that x_p takes the value x_{sigma^{-1}(p)} had.

    A factor built at a fixed point and evaluated on ``values`` equals the
    same factor built at the standard fixed point (with beta.x permuted by
    `quiverdual.localization.models.BetaClass.permuted`) and evaluated on
    the result.
    """
    order = permutation.order
    relabelled: Dict[Var, Fraction] = {}
    for var, value in values.items():
        if var.kind is VarKind.X:
            relabelled[var] = values[Var(VarKind.X, order[var.index - 1])]
        else:
            relabelled[var] = value
    return relabelled
