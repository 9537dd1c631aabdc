"""Per-beta I-function series at a fixed point."""
import logging

from quiverdual.duality.exceptions import CaseMismatch
from quiverdual.duality.series import PerBetaSeries
from quiverdual.hypergeometric.base_models import Duality, Model
from quiverdual.hypergeometric.collapsed import collapsed
from quiverdual.localization.models import BetaClass, FixedPoint, ModelShape, Side

logger = logging.getLogger(__name__)


def series_offset(model: Model, fp: FixedPoint, beta: BetaClass) -> int:
    """
    Lowest q1 exponent: +sum of beta.x over i on the Grassmannian side,
    -sum of beta.x over j on the dual side.
    """
    if fp.side is not model.side:
        raise CaseMismatch(
            f"{model.value} series need a {model.side.value} fixed point"
        )
    total_bx = beta.sum_bx(fp.indices)
    return total_bx if fp.side is Side.GRASSMANNIAN else -total_bx


def assemble(
    model: Model, fp: FixedPoint, beta: BetaClass, order: int, shape: ModelShape
) -> PerBetaSeries:
    """
    Collapsed coefficients a = 0..order of one model at ``fp``.

    Raises:
        CaseMismatch: If ``fp`` is on the wrong side for ``model``.
    """
    if order < 0:
        raise ValueError(f"Truncation order must be non-negative, got {order}")
    offset = series_offset(model, fp, beta)
    logger.debug("assembling %s at %s to order %d", model.value, fp.indices, order)
    return PerBetaSeries(
        model=model,
        fixed_point=fp,
        beta=beta,
        offset=offset,
        coefficients=tuple(
            collapsed(model, beta, a, shape, fp) for a in range(order + 1)
        ),
    )


def change_of_variables(series: PerBetaSeries, duality: Duality) -> PerBetaSeries:
    """
    Moves a series to the other side's q1 convention.

    GR: applied to the GR_HAT series, shifts by +sum(beta.x).
    PAX_PAXY: applied to the PAX series, shifts by -sum(beta.x).
    """
    source = Model.GR_HAT if duality is Duality.GR else Model.PAX
    if series.model is not source:
        raise CaseMismatch(
            f"The {duality.value} change of variables acts on {source.value} "
            f"series, got {series.model.value}"
        )
    shift = sum(series.beta.bx)
    return series.shifted(shift if duality is Duality.GR else -shift)
