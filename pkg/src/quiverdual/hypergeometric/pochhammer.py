"""
Pochhammer-type products f(h) = base + h * step.

``poch_ratio(base, step, c)`` is prod_{h <= 0} f(h) / prod_{h <= c} f(h),
a finite product for every integer c:

* c >= 0: 1 / prod_{h=1}^{c} f(h)
* c < 0:  prod_{h=c+1}^{0} f(h)

``inverse_poch_ratio`` is the reciprocal orientation, built directly so
that a vanishing factor (f(0) = 0 on a diagonal) stays in a numerator.

>>> from quiverdual.algebra.expressions import x, zgiv
>>> poch_ratio(x(1), zgiv(), 0)
1
>>> compositions(2, 2)
[(0, 2), (1, 1), (2, 0)]
"""
from typing import List, Sequence, Tuple

from quiverdual.algebra.expressions import ONE, Expr, const, product, quotient, total


def shifted(base: Expr, h: int, step: Expr) -> Expr:
    """f(h) = base + h * step."""
    if h == 0:
        return base
    return total((base, product((const(h), step))))


def finite_product(base: Expr, step: Expr, lo: int, hi: int) -> Expr:
    """prod_{h=lo}^{hi} f(h); 1 when lo > hi."""
    return product(shifted(base, h, step) for h in range(lo, hi + 1))


def _span(c: int) -> Tuple[int, int, bool]:
    # (lo, hi, in_denominator) of prod_{h<=0} f / prod_{h<=c} f
    if c >= 0:
        return 1, c, True
    return c + 1, 0, False


def poch_ratio(base: Expr, step: Expr, c: int) -> Expr:
    lo, hi, in_denominator = _span(c)
    block = finite_product(base, step, lo, hi)
    return quotient(ONE, block) if in_denominator else block


def inverse_poch_ratio(base: Expr, step: Expr, c: int) -> Expr:
    lo, hi, in_denominator = _span(c)
    block = finite_product(base, step, lo, hi)
    return block if in_denominator else quotient(ONE, block)


def compositions(
    total_: int, parts: int, lower_bound: int = 0
) -> List[Tuple[int, ...]]:
    """
    Integer vectors of length ``parts``, entries >= ``lower_bound``,
    summing to ``total_``, in lexicographic order.
    """
    if parts < 1:
        raise ValueError(f"parts must be positive, got {parts}")
    if parts == 1:
        return [(total_,)] if total_ >= lower_bound else []
    result = []
    for first in range(lower_bound, total_ - lower_bound * (parts - 1) + 1):
        for rest in compositions(total_ - first, parts - 1, lower_bound):
            result.append((first,) + rest)
    return result


def pairwise_block(
    roots: Sequence[Expr], degrees: Sequence[int], step: Expr, reverse: bool = False
) -> Expr:
    """
    prod_{i != j} inverse_poch_ratio(roots[j] - roots[i], step, d_j - d_i).

    With ``reverse`` the base is roots[i] - roots[j] instead (the shift
    stays d_j - d_i).
    """
    factors = []
    for j, (root_j, d_j) in enumerate(zip(roots, degrees)):
        for i, (root_i, d_i) in enumerate(zip(roots, degrees)):
            if i == j:
                continue
            base = root_i - root_j if reverse else root_j - root_i
            factors.append(inverse_poch_ratio(base, step, d_j - d_i))
    return product(factors)
