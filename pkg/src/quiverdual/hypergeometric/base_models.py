from abc import ABC, abstractmethod
from enum import Enum
from typing import Sequence, Tuple

from quiverdual.algebra.expressions import Expr
from quiverdual.localization.models import BetaClass, FixedPoint, ModelShape, Side


class Model(str, Enum):
    """The four GLSM geometries whose I-function factors are compared.

    GR: Grassmannian bundle Gr(r, E) with the F-twist.
    GR_HAT: its dual Gr(s, E^vee).
    PAX: zero locus model on Gr(r, E) (A-twisted numerators).
    PAXY: its dual on Gr(s, E^vee).
    """

    GR = "gr"
    GR_HAT = "gr_hat"
    PAX = "pax"
    PAXY = "paxy"

    @property
    def side(self) -> Side:
        if self in (Model.GR, Model.PAX):
            return Side.GRASSMANNIAN
        return Side.DUAL


class Form(str, Enum):
    DIRECT = "direct"
    FACTORED = "factored"


class Duality(str, Enum):
    """A pair of dual models.

    GR pairs GR with GR_HAT; PAX_PAXY pairs PAX with PAXY. The common
    factor pulled out of both sides is C_beta for GR and C~_beta for
    PAX_PAXY.
    """

    GR = "gr"
    PAX_PAXY = "pax_paxy"

    @property
    def models(self) -> Tuple[Model, Model]:
        """(Grassmannian-side model, dual-side model)."""
        if self is Duality.GR:
            return Model.GR, Model.GR_HAT
        return Model.PAX, Model.PAXY


class FactorBuilder(ABC):
    """Assembles one restricted modification factor as an expression."""

    model: Model
    form: Form

    @abstractmethod
    def build(
        self,
        shape: ModelShape,
        fp: FixedPoint,
        beta: BetaClass,
        degrees: Sequence[int],
    ) -> Expr:
        """
        Args:
            shape: Model shape.
            fp: Fixed point on the side of ``model``.
            beta: Curve-class data.
            degrees: d-vector (DIRECT) or a-vector (FACTORED), one entry per
                gauge root.
        """
