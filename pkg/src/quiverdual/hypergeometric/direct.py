"""
Modification factors restricted to a fixed point, written in the
d-variables: y_k -> x_{i_k} on Gr(r, E), w_k -> -x_{j_k} on Gr(s, E^vee).
The step of every Pochhammer product is the loop parameter z.
"""
from typing import List, Sequence

from quiverdual.algebra.expressions import Expr, product, x, zgiv, zk
from quiverdual.hypergeometric.base_models import FactorBuilder, Form, Model
from quiverdual.hypergeometric.pochhammer import (
    inverse_poch_ratio,
    pairwise_block,
    poch_ratio,
)
from quiverdual.localization.fixed_points import restrict_w, restrict_y
from quiverdual.localization.models import BetaClass, FixedPoint, ModelShape


def _y_roots(shape: ModelShape, fp: FixedPoint) -> List[Expr]:
    return [restrict_y(fp, k) for k in range(1, shape.r + 1)]


def _w_roots(shape: ModelShape, fp: FixedPoint) -> List[Expr]:
    return [restrict_w(fp, k) for k in range(1, shape.s + 1)]


def _y_tangent(
    ys: Sequence[Expr], degrees: Sequence[int], shape: ModelShape, beta: BetaClass
) -> List[Expr]:
    # prod_j prod_{i<=m} poch(y_j - x_i, d_j - beta.x_i)
    z = zgiv()
    return [
        poch_ratio(y - x(i), z, d - beta.bx[i - 1])
        for y, d in zip(ys, degrees)
        for i in range(1, shape.m + 1)
    ]


def _w_tangent(
    ws: Sequence[Expr], degrees: Sequence[int], shape: ModelShape, beta: BetaClass
) -> List[Expr]:
    # prod_j prod_{i<=m} poch(w_j + x_i, d_j + beta.x_i)
    z = zgiv()
    return [
        poch_ratio(w + x(i), z, d + beta.bx[i - 1])
        for w, d in zip(ws, degrees)
        for i in range(1, shape.m + 1)
    ]


class DirectGrassmannianFactor(FactorBuilder):
    model = Model.GR
    form = Form.DIRECT

    def build(
        self,
        shape: ModelShape,
        fp: FixedPoint,
        beta: BetaClass,
        degrees: Sequence[int],
    ) -> Expr:
        z = zgiv()
        ys = _y_roots(shape, fp)
        factors = [pairwise_block(ys, degrees, z)]
        factors += _y_tangent(ys, degrees, shape, beta)
        factors += [
            poch_ratio(zk(k) - y, z, -d + beta.bz[k - 1])
            for y, d in zip(ys, degrees)
            for k in range(1, shape.n + 1)
        ]
        return product(factors)


class DirectDualGrassmannianFactor(FactorBuilder):
    model = Model.GR_HAT
    form = Form.DIRECT

    def build(
        self,
        shape: ModelShape,
        fp: FixedPoint,
        beta: BetaClass,
        degrees: Sequence[int],
    ) -> Expr:
        z = zgiv()
        ws = _w_roots(shape, fp)
        factors = [pairwise_block(ws, degrees, z)]
        factors += _w_tangent(ws, degrees, shape, beta)
        factors += [
            inverse_poch_ratio(w + zk(k), z, d + beta.bz[k - 1])
            for k in range(1, shape.n + 1)
            for w, d in zip(ws, degrees)
        ]
        factors += [
            poch_ratio(zk(k) - x(i), z, -beta.bx[i - 1] + beta.bz[k - 1])
            for i in range(1, shape.m + 1)
            for k in range(1, shape.n + 1)
        ]
        return product(factors)


class DirectPaxFactor(FactorBuilder):
    model = Model.PAX
    form = Form.DIRECT

    def build(
        self,
        shape: ModelShape,
        fp: FixedPoint,
        beta: BetaClass,
        degrees: Sequence[int],
    ) -> Expr:
        z = zgiv()
        ys = _y_roots(shape, fp)
        factors = [pairwise_block(ys, degrees, z)]
        factors += _y_tangent(ys, degrees, shape, beta)
        factors += [
            inverse_poch_ratio(y - zk(k), z, d - beta.bz[k - 1])
            for y, d in zip(ys, degrees)
            for k in range(1, shape.n + 1)
        ]
        return product(factors)


class DirectPaxyFactor(FactorBuilder):
    model = Model.PAXY
    form = Form.DIRECT

    def build(
        self,
        shape: ModelShape,
        fp: FixedPoint,
        beta: BetaClass,
        degrees: Sequence[int],
    ) -> Expr:
        z = zgiv()
        ws = _w_roots(shape, fp)
        # prod_{i != j} inverse_poch(w_i - w_j, d_i - d_j) runs over the same
        # ordered pairs as the dual Grassmannian block
        factors = [pairwise_block(ws, degrees, z)]
        factors += _w_tangent(ws, degrees, shape, beta)
        factors += [
            poch_ratio(-w - zk(k), z, -d - beta.bz[k - 1])
            for k in range(1, shape.n + 1)
            for w, d in zip(ws, degrees)
        ]
        factors += [
            inverse_poch_ratio(x(i) - zk(k), z, beta.bx[i - 1] - beta.bz[k - 1])
            for i in range(1, shape.m + 1)
            for k in range(1, shape.n + 1)
        ]
        return product(factors)
