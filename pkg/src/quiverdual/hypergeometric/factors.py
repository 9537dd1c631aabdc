"""
Entry point for restricted modification factors.

>>> from quiverdual.localization.models import BetaClass, FixedPoint, ModelShape, Side
>>> shape = ModelShape(m=3, n=1, r=1)
>>> beta = BetaClass(bx=(1, 0, 0), bz=(0,))
>>> fp = FixedPoint(indices=(2,), side=Side.GRASSMANNIAN)
>>> degree_substitution(Model.GR, fp, beta, (2,))
(2,)
>>> direct_support_bound(Model.GR_HAT, FixedPoint(indices=(1, 3), side=Side.DUAL), beta)
(-1, 0)
"""
from typing import Tuple

from pydantic import BaseModel, model_validator

from quiverdual.algebra.expressions import Expr
from quiverdual.hypergeometric.base_models import Form, Model
from quiverdual.hypergeometric.catalogue import factor_catalogue, factor_key
from quiverdual.hypergeometric.exceptions import FactorSpecError
from quiverdual.localization.models import BetaClass, FixedPoint, ModelShape, Side


class FactorSpec(BaseModel):
    """Which factor to build, where, and for which degree vector.

    ``degrees`` is the d-vector for DIRECT forms and the a-vector for
    FACTORED forms.
    """

    model: Model
    form: Form
    fixed_point: FixedPoint
    beta: BetaClass
    degrees: Tuple[int, ...]

    model_config = {"frozen": True, "extra": "forbid"}

    @model_validator(mode="after")
    def validate_consistency(self) -> "FactorSpec":
        if self.fixed_point.side is not self.model.side:
            raise ValueError(
                f"{self.model.value} needs a {self.model.side.value} fixed point, "
                f"got a {self.fixed_point.side.value} one"
            )
        if len(self.degrees) != len(self.fixed_point):
            raise ValueError(
                f"Degree vector {self.degrees} does not match fixed point "
                f"{self.fixed_point.indices}"
            )
        return self


def restricted_factor(spec: FactorSpec, shape: ModelShape) -> Expr:
    """
    Restriction of the model's modification factor to the fixed point.

    DIRECT forms are built at the fixed point itself; FACTORED forms are
    built at the standard fixed point after relabelling [m].

    Raises:
        FactorSpecError: If the fixed point or beta does not fit ``shape``.
    """
    try:
        spec.fixed_point.check_shape(shape)
        spec.beta.check_shape(shape)
    except ValueError as e:
        raise FactorSpecError(str(e)) from e
    builder = factor_catalogue.get(factor_key(spec.model, spec.form))
    return builder.build(shape, spec.fixed_point, spec.beta, spec.degrees)


def direct_support_bound(
    model: Model, fp: FixedPoint, beta: BetaClass
) -> Tuple[int, ...]:
    """
    Per-entry bound below which the DIRECT factor vanishes identically:
    beta.x_{i_j} on the Grassmannian side, -beta.x_{j_j} on the dual side.
    """
    if fp.side is not model.side:
        raise FactorSpecError(
            f"{model.value} factors live on the {model.side.value} side"
        )
    if fp.side is Side.GRASSMANNIAN:
        return tuple(beta.bx[i - 1] for i in fp.indices)
    return tuple(-beta.bx[j - 1] for j in fp.indices)


def degree_substitution(
    model: Model, fp: FixedPoint, beta: BetaClass, d: Tuple[int, ...]
) -> Tuple[int, ...]:
    """a-vector corresponding to the d-vector ``d`` at ``fp``."""
    bound = direct_support_bound(model, fp, beta)
    return tuple(dj - b for dj, b in zip(d, bound))


def inverse_degree_substitution(
    model: Model, fp: FixedPoint, beta: BetaClass, a: Tuple[int, ...]
) -> Tuple[int, ...]:
    """d-vector corresponding to the a-vector ``a`` at ``fp``."""
    bound = direct_support_bound(model, fp, beta)
    return tuple(aj + b for aj, b in zip(a, bound))


def two_form_pair(
    model: Model,
    fp: FixedPoint,
    beta: BetaClass,
    d: Tuple[int, ...],
    shape: ModelShape,
) -> Tuple[Expr, Expr]:
    """
    The DIRECT factor at the d-vector ``d`` and the FACTORED factor at the
    matching a-vector, which must agree as rational functions.
    """
    direct = restricted_factor(
        FactorSpec(model=model, form=Form.DIRECT, fixed_point=fp, beta=beta, degrees=d),
        shape,
    )
    factored = restricted_factor(
        FactorSpec(
            model=model,
            form=Form.FACTORED,
            fixed_point=fp,
            beta=beta,
            degrees=degree_substitution(model, fp, beta, d),
        ),
        shape,
    )
    return direct, factored
