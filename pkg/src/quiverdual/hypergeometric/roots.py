"""
Fixed-point data in standard position.

Every factored or collapsed formula is written at the standard fixed point
F_0. A fixed point elsewhere is first relabelled with
`quiverdual.localization.fixed_points.permute_to_standard`; the view below
holds the relabelled x-symbols and beta.x values, so position p carries
x_{sigma^{-1}(p)}.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from quiverdual.algebra.expressions import Expr, const, quotient, total, x, zgiv, zk
from quiverdual.localization.fixed_points import (
    IndexPermutation,
    permute_to_standard,
    standard_fixed_point,
)
from quiverdual.localization.models import BetaClass, FixedPoint, ModelShape, Side


@dataclass(frozen=True)
class StandardView:
    shape: ModelShape
    fixed_point: FixedPoint
    permutation: IndexPermutation
    xs: Tuple[Expr, ...]
    bx: Tuple[int, ...]
    zs: Tuple[Expr, ...]
    bz: Tuple[int, ...]
    z: Expr

    @property
    def r(self) -> int:
        return self.shape.r

    @property
    def s(self) -> int:
        return self.shape.s

    @property
    def m(self) -> int:
        return self.shape.m

    @property
    def n(self) -> int:
        return self.shape.n

    def scaled_x(self, p: int) -> Expr:
        """z * Lx at position p (0-based): x + (beta.x) z."""
        return total((self.xs[p], const(self.bx[p]) * self.z))

    def scaled_z(self, k: int) -> Expr:
        """z * Lz_k (0-based): z_k + (beta.z_k) z."""
        return total((self.zs[k], const(self.bz[k]) * self.z))


def standard_view(
    shape: ModelShape, fp: Optional[FixedPoint], beta: BetaClass
) -> StandardView:
    """
    Relabels ``shape``'s symbols so that ``fp`` becomes the standard point.

    ``fp=None`` means the Grassmannian-side standard fixed point.
    """
    if fp is None:
        fp = standard_fixed_point(shape, Side.GRASSMANNIAN)
    fp.check_shape(shape)
    beta.check_shape(shape)
    permutation = permute_to_standard(fp, shape.m)
    order = permutation.order
    return StandardView(
        shape=shape,
        fixed_point=fp,
        permutation=permutation,
        xs=tuple(x(i) for i in order),
        bx=tuple(beta.bx[i - 1] for i in order),
        zs=tuple(zk(k) for k in range(1, shape.n + 1)),
        bz=beta.bz,
        z=zgiv(),
    )


@dataclass(frozen=True)
class ShiftedRoots:
    """Lx_p = x_p / z + beta.x_p and Lz_k = z_k / z + beta.z_k."""

    lx: Tuple[Expr, ...]
    lz: Tuple[Expr, ...]

    def sum_lx(self) -> Expr:
        return total(self.lx)

    def sum_lz(self) -> Expr:
        return total(self.lz)


def shifted_roots(view: StandardView) -> ShiftedRoots:
    return ShiftedRoots(
        lx=tuple(quotient(xp, view.z) + b for xp, b in zip(view.xs, view.bx)),
        lz=tuple(quotient(zq, view.z) + b for zq, b in zip(view.zs, view.bz)),
    )
