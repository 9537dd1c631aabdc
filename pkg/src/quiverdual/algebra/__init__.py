from quiverdual.algebra.expressions import (
    ONE,
    ZERO,
    Expr,
    Rat,
    const,
    evaluate,
    product,
    quotient,
    total,
    x,
    zgiv,
    zk,
)
from quiverdual.algebra.identity import check_identities, check_identity
from quiverdual.algebra.sampling import Point, random_point
from quiverdual.algebra.variables import Var, VarKind

__all__ = [
    "ONE",
    "ZERO",
    "Expr",
    "Point",
    "Rat",
    "Var",
    "VarKind",
    "check_identities",
    "check_identity",
    "const",
    "evaluate",
    "product",
    "quotient",
    "random_point",
    "total",
    "x",
    "zgiv",
    "zk",
]
