"""
Collapsed I-function coefficients and the common factor.

Summing a factored form over all a-vectors with |a| = a leaves
C * collapsed(model, beta, a): the common factor C (independent of a)
times a sum over compositions written purely in the shifted roots
lambda_p = x_p / z + beta.x_p and eta_k = z_k / z + beta.z_k, with an
overall z^{(n - m) a}.
"""
import logging
from typing import Optional, Sequence

from quiverdual.algebra.expressions import (
    MINUS_ONE,
    ONE,
    Expr,
    power,
    product,
    quotient,
    total,
)
from quiverdual.hypergeometric.base_models import Duality, Model
from quiverdual.hypergeometric.pochhammer import (
    compositions,
    finite_product,
    inverse_poch_ratio,
    pairwise_block,
    poch_ratio,
)
from quiverdual.hypergeometric.roots import ShiftedRoots, shifted_roots, standard_view
from quiverdual.localization.models import BetaClass, FixedPoint, ModelShape

logger = logging.getLogger(__name__)


def _tangent(lx: Sequence[Expr], p: int, a: int, outgoing: bool) -> Expr:
    factors = []
    for lam in lx:
        base = lx[p] - lam if outgoing else lam - lx[p]
        factors.append(finite_product(base, ONE, 1, a))
    return quotient(ONE, product(factors))


def collapsed_term(
    model: Model, roots: ShiftedRoots, r: int, a_vec: Sequence[int]
) -> Expr:
    """Summand of the collapsed coefficient for one a-vector, without z-power."""
    lx, lz = roots.lx, roots.lz
    factors = []
    if model in (Model.GR, Model.PAX):
        gauge = lx[:r]
        factors.append(pairwise_block(gauge, a_vec, ONE))
        for j, a in enumerate(a_vec):
            for eta in lz:
                if model is Model.GR:
                    factors.append(finite_product(eta - gauge[j], MINUS_ONE, 0, a - 1))
                else:
                    factors.append(finite_product(gauge[j] - eta, ONE, 1, a))
            factors.append(_tangent(lx, j, a, outgoing=True))
    else:
        dual = lx[r:]
        factors.append(pairwise_block(dual, a_vec, ONE, reverse=True))
        for j, a in enumerate(a_vec):
            for eta in lz:
                if model is Model.GR_HAT:
                    factors.append(finite_product(eta - dual[j], ONE, 1, a))
                else:
                    factors.append(finite_product(dual[j] - eta, MINUS_ONE, 0, a - 1))
            factors.append(_tangent(lx, r + j, a, outgoing=False))
    return product(factors)


def collapsed(
    model: Model,
    beta: BetaClass,
    a: int,
    shape: ModelShape,
    fp: Optional[FixedPoint] = None,
) -> Expr:
    """
    Collapsed coefficient of q^a for one model at one fixed point.

    Args:
        model: Which of the four geometries.
        beta: Curve-class data.
        a: Total degree, a >= 0.
        shape: Model shape.
        fp: Grassmannian-side fixed point; defaults to the standard one.
            Dual-side fixed points are accepted too and mean the same
            relabelling as their complement.

    Returns:
        z^{(n - m) a} times the sum over compositions of a into rk parts.
    """
    if a < 0:
        raise ValueError(f"Collapsed coefficients start at a = 0, got {a}")
    view = standard_view(shape, fp, beta)
    roots = shifted_roots(view)
    rank = shape.rank(model.side)
    terms = [
        collapsed_term(model, roots, shape.r, vec) for vec in compositions(a, rank)
    ]
    logger.debug("collapsed %s a=%d: %d compositions", model.value, a, len(terms))
    return product((power(view.z, (shape.n - shape.m) * a), total(terms)))


def c_factor(
    duality: Duality,
    beta: BetaClass,
    fp: Optional[FixedPoint],
    shape: ModelShape,
) -> Expr:
    """
    The a-independent factor shared by both sides of a duality.

    GR: prod_{i<=r, k<=s} poch(x_i - x_{r+k}, beta.x_i - beta.x_{r+k})
        * prod_{j<=r, k<=n} poch(z_k - x_j, beta.z_k - beta.x_j)
    PAX_PAXY: same first block,
        * prod_{i<=r, k<=n} inverse_poch(x_i - z_k, beta.x_i - beta.z_k)
    """
    view = standard_view(shape, fp, beta)
    z = view.z
    factors = [
        poch_ratio(
            view.xs[i] - view.xs[view.r + k], z, view.bx[i] - view.bx[view.r + k]
        )
        for i in range(view.r)
        for k in range(view.s)
    ]
    for j in range(view.r):
        for k in range(view.n):
            if duality is Duality.GR:
                factors.append(
                    poch_ratio(view.zs[k] - view.xs[j], z, view.bz[k] - view.bx[j])
                )
            else:
                factors.append(
                    inverse_poch_ratio(
                        view.xs[j] - view.zs[k], z, view.bx[j] - view.bz[k]
                    )
                )
    return product(factors)
