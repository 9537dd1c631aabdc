from quiverdual.localization.fixed_points import (
    IndexPermutation,
    complement,
    fixed_points,
    permute_to_standard,
    restrict_w,
    restrict_y,
    standard_fixed_point,
)
from quiverdual.localization.models import BetaClass, FixedPoint, ModelShape, Side

__all__ = [
    "BetaClass",
    "FixedPoint",
    "IndexPermutation",
    "ModelShape",
    "Side",
    "complement",
    "fixed_points",
    "permute_to_standard",
    "restrict_w",
    "restrict_y",
    "standard_fixed_point",
]
