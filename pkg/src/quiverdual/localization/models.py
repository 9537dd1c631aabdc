from enum import Enum
from typing import Tuple

from pydantic import BaseModel, field_validator, model_validator

from quiverdual.algebra.variables import Var, registry
from quiverdual.localization.exceptions import ShapeMismatch


class Side(str, Enum):
    """Which Grassmannian a fixed point lives on.

    ``GRASSMANNIAN`` is Gr(r, E) (the GR and PAX models, gauge rank r);
    ``DUAL`` is Gr(s, E^vee) (the GR_HAT and PAXY models, gauge rank s).
    """

    GRASSMANNIAN = "grassmannian"
    DUAL = "dual"

    @property
    def opposite(self) -> "Side":
        return Side.DUAL if self is Side.GRASSMANNIAN else Side.GRASSMANNIAN


class ModelShape(BaseModel):
    """Ranks (m, n, r): rk E = m, rk F = n, gauge rank r, dual rank s = m - r."""

    m: int
    n: int
    r: int

    model_config = {"frozen": True, "extra": "forbid"}

    @model_validator(mode="after")
    def validate_ranks(self) -> "ModelShape":
        if not 1 <= self.n <= self.m:
            raise ValueError(f"Need 1 <= n <= m, got m={self.m}, n={self.n}")
        if not 1 <= self.r <= self.m - 1:
            raise ValueError(f"Need 1 <= r <= m - 1, got m={self.m}, r={self.r}")
        return self

    @property
    def s(self) -> int:
        return self.m - self.r

    @property
    def registry(self) -> Tuple[Var, ...]:
        return registry(self.m, self.n)

    def rank(self, side: Side) -> int:
        return self.r if side is Side.GRASSMANNIAN else self.s

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.m, self.n, self.r)

    def __str__(self) -> str:
        return f"(m={self.m}, n={self.n}, r={self.r})"


class FixedPoint(BaseModel):
    """Torus-fixed point: strictly increasing 1-based indices into [m]."""

    indices: Tuple[int, ...]
    side: Side

    model_config = {"frozen": True, "extra": "forbid"}

    @field_validator("indices")
    def validate_increasing(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if not v:
            raise ValueError("A fixed point needs at least one index")
        if v[0] < 1:
            raise ValueError(f"Indices start at 1, got {v[0]}")
        if any(a >= b for a, b in zip(v, v[1:])):
            raise ValueError(f"Indices must be strictly increasing, got {v}")
        return v

    def check_shape(self, shape: ModelShape) -> None:
        if len(self.indices) != shape.rank(self.side):
            raise ShapeMismatch(
                f"{self.side.value} fixed point needs {shape.rank(self.side)} "
                f"indices for shape {shape}, got {self.indices}"
            )
        if self.indices[-1] > shape.m:
            raise ShapeMismatch(f"Index {self.indices[-1]} exceeds m={shape.m}")

    def __len__(self) -> int:
        return len(self.indices)


class BetaClass(BaseModel):
    """Integer curve-class data: beta.x_i (length m) and beta.z_k (length n).

    With ``ample_flag`` set, min(bx) >= max(bz) is enforced, which makes
    every collapsed coefficient with a >= 0 effective.
    """

    bx: Tuple[int, ...]
    bz: Tuple[int, ...]
    ample_flag: bool = False

    model_config = {"frozen": True, "extra": "forbid"}

    @model_validator(mode="after")
    def validate_ampleness(self) -> "BetaClass":
        if not self.bx or not self.bz:
            raise ValueError("bx and bz must be non-empty")
        if self.ample_flag and min(self.bx) < max(self.bz):
            raise ValueError(
                f"Ample flag needs min(bx) >= max(bz), got bx={self.bx}, bz={self.bz}"
            )
        return self

    def check_shape(self, shape: ModelShape) -> None:
        if len(self.bx) != shape.m or len(self.bz) != shape.n:
            raise ShapeMismatch(
                f"beta with |bx|={len(self.bx)}, |bz|={len(self.bz)} "
                f"does not fit shape {shape}"
            )

    @property
    def psi(self) -> int:
        """sum(bz) - sum(bx)."""
        return sum(self.bz) - sum(self.bx)

    def sum_bx(self, indices: Tuple[int, ...]) -> int:
        return sum(self.bx[i - 1] for i in indices)

    def permuted(self, order: Tuple[int, ...]) -> "BetaClass":
        """beta with bx reordered so that position p carries bx[order[p]]."""
        return BetaClass(
            bx=tuple(self.bx[i - 1] for i in order),
            bz=self.bz,
            ample_flag=self.ample_flag,
        )
