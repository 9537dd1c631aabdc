"""
Canonical numerator/denominator form for small expressions.

Only used as a cross-check on tiny shapes; everything else works with
exact evaluation at random points. Requires the ``symbolic`` extra
(sympy).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Mapping, Optional, Sequence, Tuple

from quiverdual.algebra.exceptions import DegreeOverflow, DivisionByZero
from quiverdual.algebra.expressions import (
    Const,
    Expr,
    Power,
    Product,
    Quotient,
    Sum,
    Variable,
)
from quiverdual.algebra.variables import Var
from quiverdual.reporting.exceptions import OptionalDependencyNotInstalled

logger = logging.getLogger(__name__)

try:
    import sympy

    SYMPY_AVAILABLE = True
except ImportError:
    SYMPY_AVAILABLE = False


def check_sympy_available() -> None:
    if not SYMPY_AVAILABLE:
        raise OptionalDependencyNotInstalled("sympy", "symbolic")


Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class SparsePolynomial:
    """Polynomial with rational coefficients in a fixed generator order.

    Terms are sorted in graded reverse lexicographic order, largest first.
    """

    generators: Tuple[Var, ...]
    terms: Tuple[Tuple[Monomial, Fraction], ...]

    @property
    def total_degree(self) -> int:
        return max((sum(monomial) for monomial, _ in self.terms), default=0)

    def evaluate(self, point: Any) -> Fraction:
        values = point if isinstance(point, Mapping) else point.values
        result = Fraction(0)
        for monomial, coefficient in self.terms:
            term = coefficient
            for var, exponent in zip(self.generators, monomial):
                if exponent:
                    term *= values[var] ** exponent
            result += term
        return result

    def to_sympy(self) -> Any:
        check_sympy_available()
        symbols = [sympy.Symbol(var.name) for var in self.generators]
        return sympy.Add(
            *(
                sympy.Rational(c.numerator, c.denominator)
                * sympy.Mul(*(s**e for s, e in zip(symbols, monomial)))
                for monomial, c in self.terms
            )
        )


@dataclass(frozen=True)
class CanonicalForm:
    """numerator / denominator, both expanded; no common factors removed."""

    numerator: SparsePolynomial
    denominator: SparsePolynomial

    def evaluate(self, point: Any) -> Fraction:
        den = self.denominator.evaluate(point)
        if den == 0:
            raise DivisionByZero(self, "canonical denominator vanishes")
        return self.numerator.evaluate(point) / den

    def equals(self, other: "CanonicalForm") -> bool:
        """Equality as rational functions, by cross-multiplication."""
        check_sympy_available()
        cross = sympy.expand(
            self.numerator.to_sympy() * other.denominator.to_sympy()
            - other.numerator.to_sympy() * self.denominator.to_sympy()
        )
        return bool(cross == 0)


def to_sympy(expr: Expr) -> Any:
    """Converts an expression tree to a sympy expression over named symbols."""
    check_sympy_available()
    memo: Dict[int, Any] = {}

    def convert(node: Expr) -> Any:
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, Const):
            value = sympy.Rational(node.value.numerator, node.value.denominator)
        elif isinstance(node, Variable):
            value = sympy.Symbol(node.var.name)
        elif isinstance(node, Sum):
            value = sympy.Add(*(convert(t) for t in node.terms))
        elif isinstance(node, Product):
            value = sympy.Mul(*(convert(f) for f in node.factors))
        elif isinstance(node, Quotient):
            value = convert(node.numerator) / convert(node.denominator)
        elif isinstance(node, Power):
            value = convert(node.base) ** node.exponent
        else:
            raise TypeError(f"Unknown expression node {type(node).__name__}")
        memo[key] = value
        return value

    return convert(expr)


def _sparse(poly: Any, generators: Tuple[Var, ...]) -> SparsePolynomial:
    terms = tuple(
        (tuple(int(e) for e in monomial), Fraction(int(c.p), int(c.q)))
        for monomial, c in poly.terms(order="grevlex")
    )
    return SparsePolynomial(generators=generators, terms=terms)


def expand_small(
    expr: Expr,
    max_degree: int,
    generators: Optional[Sequence[Var]] = None,
) -> CanonicalForm:
    """
    Brings ``expr`` to the form P / Q with P and Q expanded polynomials.

    No gcd is taken, so P / Q need not be reduced; compare two forms with
    `CanonicalForm.equals`.

    Args:
        expr: Expression over registry symbols, intended for shapes with
            m + n <= 5.
        max_degree: Largest total degree allowed in P or Q.
        generators: Generator order; defaults to the variables of ``expr``
            in registry order.

    Raises:
        DegreeOverflow: If P or Q exceeds ``max_degree``.
        OptionalDependencyNotInstalled: Without sympy.
    """
    check_sympy_available()
    gens = tuple(sorted(generators if generators is not None else expr.variables()))
    symbols = [sympy.Symbol(var.name) for var in gens]

    together = sympy.together(to_sympy(expr))
    numerator, denominator = sympy.fraction(together)
    if not symbols:
        # constant expression: sympy wants at least one generator
        value = sympy.Rational(together)
        return CanonicalForm(
            SparsePolynomial((), (((), Fraction(int(value.p), int(value.q))),)),
            SparsePolynomial((), (((), Fraction(1)),)),
        )
    num_poly = sympy.Poly(numerator, *symbols, domain="QQ")
    den_poly = sympy.Poly(denominator, *symbols, domain="QQ")
    degree = max(num_poly.total_degree(), den_poly.total_degree())
    if degree > max_degree:
        raise DegreeOverflow(
            f"Canonical form has total degree {degree} > max_degree {max_degree}"
        )
    logger.debug("expand_small: degree %d over %d generators", degree, len(gens))
    return CanonicalForm(_sparse(num_poly, gens), _sparse(den_poly, gens))
