import pytest

from quiverdual.algebra.expressions import ZERO, const, x
from quiverdual.algebra.sampling import random_point
from quiverdual.algebra.variables import x_var
from quiverdual.duality.exceptions import TruncationTooSmall
from quiverdual.duality.kernels import Kernel, integer_binomial
from quiverdual.duality.models import KernelKind
from quiverdual.duality.series import PerBetaSeries
from quiverdual.hypergeometric.base_models import Model
from quiverdual.localization.models import BetaClass, FixedPoint, ModelShape, Side


@pytest.fixture
def series():
    return PerBetaSeries(
        model=Model.GR,
        fixed_point=FixedPoint(indices=(1,), side=Side.GRASSMANNIAN),
        beta=BetaClass(bx=(2, 0), bz=(0,)),
        offset=2,
        coefficients=(const(1), x(1), const(3)),
    )


def test_coefficients_by_exponent(series):
    assert series.order == 2
    assert series.coefficient(1) is ZERO
    assert series.coefficient(3) is series.coefficients[1]
    with pytest.raises(TruncationTooSmall):
        series.coefficient(5)


def test_shift_moves_offset_only(series):
    moved = series.shifted(-3)
    assert moved.offset == -1
    assert moved.coefficients == series.coefficients


def test_product_with_kernel(series):
    point = random_point(ModelShape(m=2, n=1, r=1), seed=0)
    x1 = point[x_var(1)]
    doubled = series.times(integer_binomial(1, rank=0, order=2))
    assert [c.evaluate(point) for c in doubled.coefficients] == [1, x1 + 1, 3 + x1]
    unchanged = series.times(Kernel(kind=KernelKind.NONE, rank=0, order=3))
    assert [c.evaluate(point) for c in unchanged.coefficients] == [1, x1, 3]


def test_kernel_must_reach_series_order(series):
    with pytest.raises(TruncationTooSmall):
        series.times(Kernel(kind=KernelKind.NONE, rank=0, order=1))
