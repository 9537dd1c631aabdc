"""
Universal factors relating the two sides of a duality.

For rank rk (s on the Grassmannian-bundle duality, r on the PAX/PAXY one):

* EXP:   exp((-1)^rk q / z), coefficient (-1)^{rk a} z^{-a} / a!
* BINOM: (1 + (-1)^rk q)^psi, coefficient (-1)^{rk a} prod_{h<a} (psi - h)/(a - h)
* NONE:  1
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from quiverdual.algebra.expressions import (
    ONE,
    ZERO,
    Expr,
    const,
    power,
    product,
    quotient,
    total,
    zgiv,
    zk,
)
from quiverdual.algebra.expressions import x as x_symbol
from quiverdual.duality.models import KernelKind
from quiverdual.hypergeometric.base_models import Duality
from quiverdual.hypergeometric.roots import shifted_roots, standard_view
from quiverdual.localization.models import BetaClass, ModelShape


def _sign(rank: int, a: int) -> int:
    return -1 if (rank * a) % 2 else 1


def binomial_coefficient(psi: Expr, a: int) -> Expr:
    """Generalised binomial coefficient psi choose a, as an expression."""
    return product(
        (const(Fraction(1, math.factorial(a))),)
        + tuple(total((psi, const(-h))) for h in range(a))
    )


@dataclass(frozen=True)
class Kernel:
    kind: KernelKind
    rank: int
    order: int
    psi: Optional[Expr] = None
    negated: bool = False
    coefficients: Tuple[Expr, ...] = field(init=False)

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"Kernel order must be non-negative, got {self.order}")
        if self.kind is KernelKind.BINOM and self.psi is None:
            raise ValueError("A binomial kernel needs an exponent psi")
        coefficients = tuple(self._coefficient(a) for a in range(self.order + 1))
        object.__setattr__(self, "coefficients", coefficients)

    def _coefficient(self, a: int) -> Expr:
        sign = _sign(self.rank, a)
        if self.kind is KernelKind.NONE:
            return ONE if a == 0 else ZERO
        if self.kind is KernelKind.EXP:
            if self.negated:
                sign *= -1 if a % 2 else 1
            return product(
                (const(Fraction(sign, math.factorial(a))), power(zgiv(), -a))
            )
        assert self.psi is not None
        psi = -self.psi if self.negated else self.psi
        return product((const(sign), binomial_coefficient(psi, a)))

    def __getitem__(self, a: int) -> Expr:
        return self.coefficients[a]

    def inverse(self) -> "Kernel":
        """Reciprocal series: negated EXP argument or negated BINOM exponent."""
        return Kernel(
            kind=self.kind,
            rank=self.rank,
            order=self.order,
            psi=self.psi,
            negated=not self.negated,
        )


def duality_rank(duality: Duality, shape: ModelShape) -> int:
    """Rank entering the kernel signs: s for GR, r for PAX_PAXY."""
    return shape.s if duality is Duality.GR else shape.r


def kernel_psi(
    duality: Duality, beta: BetaClass, shape: ModelShape, include_beta: bool = True
) -> Expr:
    """
    Exponent of the binomial kernel.

    GR: s + sum_k Lz_k - sum_i Lx_i; PAX_PAXY: r + sum_i Lx_i - sum_k Lz_k.
    Without beta the shifted roots are replaced by x / z and z_k / z, and
    the difference is the integer `beta_exponent`.
    """
    if include_beta:
        roots = shifted_roots(standard_view(shape, None, beta))
        difference = roots.sum_lz() - roots.sum_lx()
    else:
        z_sum = total(zk(k) for k in range(1, shape.n + 1))
        x_sum = total(x_symbol(i) for i in range(1, shape.m + 1))
        difference = quotient(z_sum - x_sum, zgiv())
    if duality is Duality.GR:
        return total((const(shape.s), difference))
    return total((const(shape.r), -difference))


def beta_exponent(duality: Duality, beta: BetaClass) -> int:
    """sum(beta.z) - sum(beta.x) for GR, its negative for PAX_PAXY."""
    return beta.psi if duality is Duality.GR else -beta.psi


def kernel_series(
    kind: KernelKind,
    rank: int,
    psi_mode: Duality,
    beta: BetaClass,
    shape: ModelShape,
    order: int,
    include_beta: bool = True,
) -> Kernel:
    """
    Coefficients 0..order of the universal factor of the given kind.

    For BINOM the exponent is `kernel_psi` of ``psi_mode``; by default it is
    the localized combined exponent, which already contains the integer
    part `beta_exponent`. EXP and NONE ignore ``psi_mode``.
    """
    psi = None
    if kind is KernelKind.BINOM:
        psi = kernel_psi(psi_mode, beta, shape, include_beta=include_beta)
    return Kernel(kind=kind, rank=rank, order=order, psi=psi)


def integer_binomial(exponent: int, rank: int, order: int) -> Kernel:
    """(1 + (-1)^rank q)^exponent for an integer exponent."""
    return Kernel(kind=KernelKind.BINOM, rank=rank, order=order, psi=const(exponent))
