"""
Restricted modification factors at the standard fixed point, written in
the a-variables (a_j = d_j - beta.x_j on Gr(r, E), a_j = d_j + beta.x_{r+j}
on Gr(s, E^vee)). Each is a product of four blocks:

1. the pairwise gauge block,
2. a ratio whose numerator collects the F- (or A-) twist and whose
   denominator collects the tangent directions,
3. and 4. the a-independent common factor (C_beta or C~_beta).

The factors vanish identically when some a_j < 0.

Below X_p = x_p + (beta.x_p) z and Z_k = z_k + (beta.z_k) z are the
z-scaled shifted roots, so e.g. X_j - X_i = x_j - x_i + (beta.x_j - beta.x_i) z.
"""
from typing import List, Sequence

from quiverdual.algebra.expressions import ONE, ZERO, Expr, product, quotient
from quiverdual.hypergeometric.base_models import FactorBuilder, Form, Model
from quiverdual.hypergeometric.pochhammer import (
    finite_product,
    inverse_poch_ratio,
    pairwise_block,
    poch_ratio,
)
from quiverdual.hypergeometric.roots import StandardView, standard_view
from quiverdual.localization.models import BetaClass, FixedPoint, ModelShape


def _tangent_denominators(
    view: StandardView, p: int, a: int, outgoing: bool
) -> List[Expr]:
    # prod_{i<=m} 1 / prod_{h=1}^{a} (X_p - X_i + h z), or (X_i - X_p + h z)
    factors = []
    for i in range(view.m):
        if outgoing:
            base = view.scaled_x(p) - view.scaled_x(i)
        else:
            base = view.scaled_x(i) - view.scaled_x(p)
        factors.append(quotient(ONE, finite_product(base, view.z, 1, a)))
    return factors


def _grassmannian_common(view: StandardView) -> List[Expr]:
    # prod_{j<=r, i<=s} poch(x_j - x_{r+i}, beta.x_j - beta.x_{r+i})
    return [
        poch_ratio(
            view.xs[j] - view.xs[view.r + i],
            view.z,
            view.bx[j] - view.bx[view.r + i],
        )
        for j in range(view.r)
        for i in range(view.s)
    ]


class FactoredGrassmannianFactor(FactorBuilder):
    model = Model.GR
    form = Form.FACTORED

    def build(
        self,
        shape: ModelShape,
        fp: FixedPoint,
        beta: BetaClass,
        degrees: Sequence[int],
    ) -> Expr:
        if min(degrees) < 0:
            return ZERO
        view = standard_view(shape, fp, beta)
        z = view.z
        gauge = [view.scaled_x(j) for j in range(view.r)]
        factors = [pairwise_block(gauge, degrees, z)]
        for j, a in enumerate(degrees):
            for k in range(view.n):
                factors.append(
                    finite_product(view.scaled_z(k) - gauge[j], -z, 0, a - 1)
                )
            factors += _tangent_denominators(view, j, a, outgoing=True)
        factors += _grassmannian_common(view)
        factors += [
            poch_ratio(view.zs[k] - view.xs[j], z, -view.bx[j] + view.bz[k])
            for j in range(view.r)
            for k in range(view.n)
        ]
        return product(factors)


class FactoredDualGrassmannianFactor(FactorBuilder):
    model = Model.GR_HAT
    form = Form.FACTORED

    def build(
        self,
        shape: ModelShape,
        fp: FixedPoint,
        beta: BetaClass,
        degrees: Sequence[int],
    ) -> Expr:
        if min(degrees) < 0:
            return ZERO
        view = standard_view(shape, fp, beta)
        z = view.z
        dual = [view.scaled_x(view.r + j) for j in range(view.s)]
        factors = [pairwise_block(dual, degrees, z, reverse=True)]
        for j, a in enumerate(degrees):
            for k in range(view.n):
                factors.append(finite_product(view.scaled_z(k) - dual[j], z, 1, a))
            factors += _tangent_denominators(view, view.r + j, a, outgoing=False)
        factors += [
            poch_ratio(
                view.xs[i] - view.xs[view.r + j],
                z,
                view.bx[i] - view.bx[view.r + j],
            )
            for i in range(view.r)
            for j in range(view.s)
        ]
        factors += [
            poch_ratio(view.zs[k] - view.xs[i], z, -view.bx[i] + view.bz[k])
            for i in range(view.r)
            for k in range(view.n)
        ]
        return product(factors)


class FactoredPaxFactor(FactorBuilder):
    model = Model.PAX
    form = Form.FACTORED

    def build(
        self,
        shape: ModelShape,
        fp: FixedPoint,
        beta: BetaClass,
        degrees: Sequence[int],
    ) -> Expr:
        if min(degrees) < 0:
            return ZERO
        view = standard_view(shape, fp, beta)
        z = view.z
        gauge = [view.scaled_x(j) for j in range(view.r)]
        factors = [pairwise_block(gauge, degrees, z)]
        for j, a in enumerate(degrees):
            for k in range(view.n):
                factors.append(finite_product(gauge[j] - view.scaled_z(k), z, 1, a))
            factors += _tangent_denominators(view, j, a, outgoing=True)
        factors += _grassmannian_common(view)
        factors += [
            inverse_poch_ratio(view.xs[j] - view.zs[k], z, view.bx[j] - view.bz[k])
            for j in range(view.r)
            for k in range(view.n)
        ]
        return product(factors)


class FactoredPaxyFactor(FactorBuilder):
    model = Model.PAXY
    form = Form.FACTORED

    def build(
        self,
        shape: ModelShape,
        fp: FixedPoint,
        beta: BetaClass,
        degrees: Sequence[int],
    ) -> Expr:
        if min(degrees) < 0:
            return ZERO
        view = standard_view(shape, fp, beta)
        z = view.z
        dual = [view.scaled_x(view.r + j) for j in range(view.s)]
        factors = [pairwise_block(dual, degrees, z, reverse=True)]
        for j, a in enumerate(degrees):
            for k in range(view.n):
                factors.append(finite_product(dual[j] - view.scaled_z(k), -z, 0, a - 1))
            factors += _tangent_denominators(view, view.r + j, a, outgoing=False)
        factors += [
            poch_ratio(
                view.xs[i] - view.xs[view.r + j],
                z,
                view.bx[i] - view.bx[view.r + j],
            )
            for j in range(view.s)
            for i in range(view.r)
        ]
        factors += [
            inverse_poch_ratio(view.xs[i] - view.zs[k], z, view.bx[i] - view.bz[k])
            for i in range(view.r)
            for k in range(view.n)
        ]
        return product(factors)
