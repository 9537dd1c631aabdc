"""
Immutable expression trees over the exact rationals.

Nodes are never rewritten after construction, so subtrees can be shared
freely between expressions. The builder helpers (`total`, `product`,
`quotient`, `power`) fold literal constants and flatten nested sums and
products; nothing else is simplified. In particular no cancellation is
attempted, and a quotient whose denominator vanishes at a point raises
`DivisionByZero` when evaluated there.

Usage (Doctest):
----------------
>>> from fractions import Fraction
>>> from quiverdual.algebra.expressions import evaluate, x, zgiv
>>> from quiverdual.algebra.variables import x_var, ZGIV
>>> e = (x(1) + 2) / zgiv()
>>> evaluate(e, {x_var(1): Fraction(1, 3), ZGIV: Fraction(7)})
Fraction(1, 3)
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Tuple, Union

from quiverdual.algebra.exceptions import DivisionByZero, UnassignedVariableError
from quiverdual.algebra.variables import ZGIV, Var, x_var, zk_var

Rat = Fraction
Number = Union[int, Fraction]
Operand = Union["Expr", int, Fraction]

_Cache = Dict[int, Fraction]


class Expr(ABC):
    """Base class of expression nodes."""

    @abstractmethod
    def children(self) -> Tuple["Expr", ...]:
        """Direct subexpressions."""

    @abstractmethod
    def _compute(self, values: Mapping[Var, Fraction], cache: _Cache) -> Fraction:
        pass

    def _evaluate(self, values: Mapping[Var, Fraction], cache: _Cache) -> Fraction:
        key = id(self)
        hit = cache.get(key)
        if hit is None:
            hit = self._compute(values, cache)
            cache[key] = hit
        return hit

    def evaluate(self, point: Any) -> Fraction:
        return evaluate(self, point)

    def variables(self) -> FrozenSet[Var]:
        """Registry symbols occurring anywhere in the tree."""
        found = set()
        for node in self._walk():
            if isinstance(node, Variable):
                found.add(node.var)
        return frozenset(found)

    def size(self) -> int:
        """Number of distinct nodes (shared subtrees counted once)."""
        return sum(1 for _ in self._walk())

    def _walk(self) -> Iterable["Expr"]:
        seen = set()
        stack: List[Expr] = [self]
        while stack:
            node = stack.pop()
            if id(node) in seen:
                continue
            seen.add(id(node))
            yield node
            stack.extend(node.children())

    def __add__(self, other: Operand) -> "Expr":
        return total((self, as_expr(other)))

    def __radd__(self, other: Operand) -> "Expr":
        return total((as_expr(other), self))

    def __sub__(self, other: Operand) -> "Expr":
        return total((self, -as_expr(other)))

    def __rsub__(self, other: Operand) -> "Expr":
        return total((as_expr(other), -self))

    def __mul__(self, other: Operand) -> "Expr":
        return product((self, as_expr(other)))

    def __rmul__(self, other: Operand) -> "Expr":
        return product((as_expr(other), self))

    def __truediv__(self, other: Operand) -> "Expr":
        return quotient(self, as_expr(other))

    def __rtruediv__(self, other: Operand) -> "Expr":
        return quotient(as_expr(other), self)

    def __neg__(self) -> "Expr":
        return product((MINUS_ONE, self))

    def __pow__(self, exponent: int) -> "Expr":
        return power(self, exponent)

    def __repr__(self) -> str:
        return self.to_string()

    @abstractmethod
    def to_string(self) -> str:
        pass


@dataclass(frozen=True, eq=False, repr=False)
class Const(Expr):
    value: Fraction

    def children(self) -> Tuple[Expr, ...]:
        return ()

    def _compute(self, values: Mapping[Var, Fraction], cache: _Cache) -> Fraction:
        return self.value

    def _evaluate(self, values: Mapping[Var, Fraction], cache: _Cache) -> Fraction:
        return self.value

    def to_string(self) -> str:
        return str(self.value)


@dataclass(frozen=True, eq=False, repr=False)
class Variable(Expr):
    var: Var

    def children(self) -> Tuple[Expr, ...]:
        return ()

    def _compute(self, values: Mapping[Var, Fraction], cache: _Cache) -> Fraction:
        try:
            return values[self.var]
        except KeyError:
            raise UnassignedVariableError(f"No value for {self.var.name}") from None

    def _evaluate(self, values: Mapping[Var, Fraction], cache: _Cache) -> Fraction:
        return self._compute(values, cache)

    def to_string(self) -> str:
        return self.var.name


@dataclass(frozen=True, eq=False, repr=False)
class Sum(Expr):
    terms: Tuple[Expr, ...]

    def children(self) -> Tuple[Expr, ...]:
        return self.terms

    def _compute(self, values: Mapping[Var, Fraction], cache: _Cache) -> Fraction:
        result = Fraction(0)
        for term in self.terms:
            result += term._evaluate(values, cache)
        return result

    def to_string(self) -> str:
        return "(" + " + ".join(t.to_string() for t in self.terms) + ")"


@dataclass(frozen=True, eq=False, repr=False)
class Product(Expr):
    factors: Tuple[Expr, ...]

    def children(self) -> Tuple[Expr, ...]:
        return self.factors

    def _compute(self, values: Mapping[Var, Fraction], cache: _Cache) -> Fraction:
        result = Fraction(1)
        for factor in self.factors:
            result *= factor._evaluate(values, cache)
        return result

    def to_string(self) -> str:
        return "*".join(f.to_string() for f in self.factors)


@dataclass(frozen=True, eq=False, repr=False)
class Quotient(Expr):
    numerator: Expr
    denominator: Expr

    def children(self) -> Tuple[Expr, ...]:
        return (self.numerator, self.denominator)

    def _compute(self, values: Mapping[Var, Fraction], cache: _Cache) -> Fraction:
        den = self.denominator._evaluate(values, cache)
        if den == 0:
            raise DivisionByZero(self.denominator)
        return self.numerator._evaluate(values, cache) / den

    def to_string(self) -> str:
        return f"({self.numerator.to_string()})/({self.denominator.to_string()})"


@dataclass(frozen=True, eq=False, repr=False)
class Power(Expr):
    base: Expr
    exponent: int

    def children(self) -> Tuple[Expr, ...]:
        return (self.base,)

    def _compute(self, values: Mapping[Var, Fraction], cache: _Cache) -> Fraction:
        base = self.base._evaluate(values, cache)
        if base == 0 and self.exponent < 0:
            raise DivisionByZero(self.base, "negative power of zero")
        return base**self.exponent

    def to_string(self) -> str:
        return f"({self.base.to_string()})^{self.exponent}"


ZERO = Const(Fraction(0))
ONE = Const(Fraction(1))
MINUS_ONE = Const(Fraction(-1))


def const(value: Number) -> Const:
    value = Fraction(value)
    if value == 0:
        return ZERO
    if value == 1:
        return ONE
    return Const(value)


def as_expr(value: Operand) -> Expr:
    if isinstance(value, Expr):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return const(value)
    raise TypeError(f"Cannot use {type(value).__name__} as an expression")


def variable(var: Var) -> Variable:
    return Variable(var)


def x(index: int) -> Variable:
    return Variable(x_var(index))


def zk(index: int) -> Variable:
    return Variable(zk_var(index))


def zgiv() -> Variable:
    return Variable(ZGIV)


def is_zero(expr: Expr) -> bool:
    """True only for the literal zero constant."""
    return isinstance(expr, Const) and expr.value == 0


def total(terms: Iterable[Operand]) -> Expr:
    """Sum of ``terms`` with literal constants folded; empty sum is 0."""
    constant = Fraction(0)
    parts: List[Expr] = []
    for term in map(as_expr, terms):
        if isinstance(term, Const):
            constant += term.value
        elif isinstance(term, Sum):
            for inner in term.terms:
                if isinstance(inner, Const):
                    constant += inner.value
                else:
                    parts.append(inner)
        else:
            parts.append(term)
    if not parts:
        return const(constant)
    if constant != 0:
        parts.append(Const(constant))
    if len(parts) == 1:
        return parts[0]
    return Sum(tuple(parts))


def product(factors: Iterable[Operand]) -> Expr:
    """Product of ``factors`` with literal constants folded; empty product is 1.

    A literal zero factor makes the whole product the zero constant.
    """
    constant = Fraction(1)
    parts: List[Expr] = []
    for factor in map(as_expr, factors):
        if isinstance(factor, Const):
            constant *= factor.value
        elif isinstance(factor, Product):
            for inner in factor.factors:
                if isinstance(inner, Const):
                    constant *= inner.value
                else:
                    parts.append(inner)
        else:
            parts.append(factor)
    if constant == 0:
        return ZERO
    if not parts:
        return const(constant)
    if constant != 1:
        parts.insert(0, Const(constant))
    if len(parts) == 1:
        return parts[0]
    return Product(tuple(parts))


def quotient(numerator: Operand, denominator: Operand) -> Expr:
    """Quotient node; a literal zero denominator fails immediately."""
    numerator, denominator = as_expr(numerator), as_expr(denominator)
    if isinstance(denominator, Const):
        if denominator.value == 0:
            raise DivisionByZero(denominator)
        return product((numerator, const(1 / denominator.value)))
    if is_zero(numerator):
        return ZERO
    return Quotient(numerator, denominator)


def power(base: Operand, exponent: int) -> Expr:
    """Integer power; negative exponents give reciprocal powers."""
    base = as_expr(base)
    if exponent == 0:
        return ONE
    if exponent == 1:
        return base
    if isinstance(base, Const):
        if base.value == 0 and exponent < 0:
            raise DivisionByZero(base, "negative power of zero")
        return const(base.value**exponent)
    return Power(base, exponent)


def evaluate(expr: Expr, point: Any) -> Fraction:
    """Exact value of ``expr`` at ``point``.

    Args:
        expr: Expression to evaluate.
        point: A `quiverdual.algebra.sampling.Point` or any mapping from
            `Var` to rationals covering the variables of ``expr``.

    Raises:
        DivisionByZero: If a denominator vanishes at ``point``.
        UnassignedVariableError: If ``point`` misses a variable.
    """
    return expr._evaluate(_values_of(point), {})


def evaluate_many(exprs: Iterable[Expr], point: Any) -> Tuple[Fraction, ...]:
    """Evaluates several expressions sharing one node cache."""
    values = _values_of(point)
    cache: _Cache = {}
    return tuple(e._evaluate(values, cache) for e in exprs)


def _values_of(point: Any) -> Mapping[Var, Fraction]:
    if isinstance(point, Mapping):
        return point
    return point.values
