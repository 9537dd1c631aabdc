"""
Numerology of the determinantal locus B(A, s) = {b : rank A_b <= s} of a
bundle map A: E -> F with rk E = m >= rk F = n.

For a generic section, B(A, s) has codimension (n - s)(m - s). On the
projective base P^N with E trivial and F = O(1)^n, the locus is
Calabi-Yau when m = n and N + 1 = (m - s) m.

Usage (Doctest):
----------------
>>> from quiverdual.determinantal.numerology import DetConfig, codim, dimension
>>> gn = DetConfig(m=4, n=4, s=2, base_kind="proj", base_dim=7)
>>> codim(gn), dimension(gn)
(4, 3)
"""
from enum import Enum
from itertools import product
from typing import List, Optional, Tuple

from pydantic import BaseModel, model_validator

from quiverdual.determinantal.exceptions import DeterminantalException


class BaseKind(str, Enum):
    FORMAL = "formal"
    PROJ = "proj"


class DetConfig(BaseModel):
    m: int
    n: int
    s: int
    base_kind: BaseKind = BaseKind.FORMAL
    base_dim: Optional[int] = None

    model_config = {"frozen": True, "extra": "forbid"}

    @model_validator(mode="after")
    def validate_ranks(self) -> "DetConfig":
        if not 0 <= self.s <= self.n <= self.m:
            raise ValueError(
                f"Need 0 <= s <= n <= m, got m={self.m}, n={self.n}, s={self.s}"
            )
        if self.base_kind is BaseKind.PROJ:
            if self.base_dim is None or self.base_dim < 1:
                raise ValueError(f"P^N bases need N >= 1, got {self.base_dim}")
        elif self.base_dim is not None:
            raise ValueError("Formal bases carry no dimension")
        return self


def codim(cfg: DetConfig) -> int:
    return (cfg.n - cfg.s) * (cfg.m - cfg.s)


def _projective_dim(cfg: DetConfig) -> int:
    if cfg.base_kind is not BaseKind.PROJ or cfg.base_dim is None:
        raise DeterminantalException(f"{cfg} has no projective base dimension")
    return cfg.base_dim


def dimension(cfg: DetConfig) -> int:
    """
    dim B(A, s) = N - codim on P^N.

    Raises:
        DeterminantalException: For formal bases.
    """
    return _projective_dim(cfg) - codim(cfg)


def cy_defect(cfg: DetConfig) -> int:
    """
    N + 1 - (m - s) m: zero exactly when B(A, s) in P^N is Calabi-Yau.

    Raises:
        DeterminantalException: Unless m = n on a projective base.
    """
    if cfg.m != cfg.n:
        raise DeterminantalException(
            f"The Calabi-Yau condition is stated for m = n, got m={cfg.m}, n={cfg.n}"
        )
    return _projective_dim(cfg) + 1 - (cfg.m - cfg.s) * cfg.m


def cy_classify(
    max_m: int, max_N: int, dimension: int = 3
) -> List[Tuple[int, int, int]]:
    """
    All (s, m, N) with m = n, 0 <= s < m <= max_m and N <= max_N for which
    B(A, s) in P^N is a Calabi-Yau variety of the given dimension, sorted
    by (N, m, s).

    Raises:
        ValueError: If a bound is below 1.

    >>> cy_classify(8, 30)
    [(4, 5, 4), (2, 4, 7), (1, 5, 19)]
    """
    if max_m < 1 or max_N < 1:
        raise ValueError(f"Bounds must be >= 1, got max_m={max_m}, max_N={max_N}")
    found = []
    for m, N in product(range(1, max_m + 1), range(1, max_N + 1)):
        for s in range(m):
            cfg = DetConfig(m=m, n=m, s=s, base_kind=BaseKind.PROJ, base_dim=N)
            if cy_defect(cfg) == 0 and N - (m - s) ** 2 == dimension:
                found.append((s, m, N))
    return sorted(found, key=lambda t: (t[2], t[1], t[0]))


def singular_stratum(cfg: DetConfig) -> DetConfig:
    """
    The locus B(A, s - 1), which contains the singularities of B(A, s).

    Raises:
        DeterminantalException: If s = 0.
    """
    if cfg.s == 0:
        raise DeterminantalException("B(A, 0) has no smaller stratum")
    return cfg.model_copy(update={"s": cfg.s - 1})
