"""Symbols of the variable registry.

A shape (m, n, r) owns the registry x_1..x_m, z_1..z_n, z in that order:
the equivariant parameters of the torus acting on E, the Chern roots of F
and the loop-rotation parameter.
"""
from dataclasses import dataclass
from enum import IntEnum
from typing import Tuple


class VarKind(IntEnum):
    """Kinds of registry symbols; the integer value fixes registry order."""

    X = 0
    ZK = 1
    ZGIV = 2


@dataclass(frozen=True, order=True)
class Var:
    kind: VarKind
    index: int = 0

    def __post_init__(self) -> None:
        if self.kind is VarKind.ZGIV:
            if self.index != 0:
                raise ValueError("The loop parameter z carries no index")
        elif self.index < 1:
            raise ValueError(f"Variable indices start at 1, got {self.index}")

    @property
    def name(self) -> str:
        if self.kind is VarKind.X:
            return f"x_{self.index}"
        if self.kind is VarKind.ZK:
            return f"z_{self.index}"
        return "z"

    def __str__(self) -> str:
        return self.name


def x_var(index: int) -> Var:
    return Var(VarKind.X, index)


def zk_var(index: int) -> Var:
    return Var(VarKind.ZK, index)


ZGIV = Var(VarKind.ZGIV)


def registry(m: int, n: int) -> Tuple[Var, ...]:
    """Registry symbols for m equivariant parameters and n Chern roots."""
    return (
        tuple(x_var(i) for i in range(1, m + 1))
        + tuple(zk_var(k) for k in range(1, n + 1))
        + (ZGIV,)
    )


def parse_var(name: str) -> Var:
    """Inverse of `Var.name`.

    >>> parse_var("x_3")
    Var(kind=<VarKind.X: 0>, index=3)
    >>> parse_var("z")
    Var(kind=<VarKind.ZGIV: 2>, index=0)
    """
    if name == "z":
        return ZGIV
    prefix, _, index = name.partition("_")
    if prefix == "x" and index.isdigit():
        return x_var(int(index))
    if prefix == "z" and index.isdigit():
        return zk_var(int(index))
    raise ValueError(f"Not a registry variable name: {name!r}")
