from fractions import Fraction

import pytest

from quiverdual.algebra.expressions import product, total
from quiverdual.algebra.sampling import random_point
from quiverdual.algebra.variables import ZGIV
from quiverdual.duality.kernels import (
    Kernel,
    beta_exponent,
    duality_rank,
    integer_binomial,
    kernel_psi,
    kernel_series,
)
from quiverdual.duality.models import KernelKind
from quiverdual.hypergeometric.base_models import Duality
from quiverdual.localization.models import BetaClass, ModelShape


@pytest.fixture
def shape():
    return ModelShape(m=3, n=3, r=1)


@pytest.fixture
def beta():
    return BetaClass(bx=(1, 0, 2), bz=(-1, 0, 1))


def _values(kernel, point):
    return [coefficient.evaluate(point) for coefficient in kernel.coefficients]


def test_trivial_kernel(shape):
    kernel = Kernel(kind=KernelKind.NONE, rank=2, order=3)
    assert _values(kernel, random_point(shape, seed=0)) == [1, 0, 0, 0]


@pytest.mark.parametrize(
    "exponent, rank, expected",
    [
        (3, 0, [1, 3, 3, 1, 0]),
        (3, 1, [1, -3, 3, -1, 0]),
        (-1, 1, [1, 1, 1, 1, 1]),
        (-2, 2, [1, -2, 3, -4, 5]),
    ],
)
def test_integer_binomial(shape, exponent, rank, expected):
    kernel = integer_binomial(exponent, rank, order=4)
    assert _values(kernel, random_point(shape, seed=0)) == expected


def test_exponential_kernel(shape):
    point = random_point(shape, seed=2)
    z = point[ZGIV]
    kernel = Kernel(kind=KernelKind.EXP, rank=1, order=3)
    assert _values(kernel, point) == [
        Fraction(1),
        -1 / z,
        1 / (2 * z**2),
        -1 / (6 * z**3),
    ]


@pytest.mark.parametrize("kind", [KernelKind.EXP, KernelKind.BINOM])
def test_inverse_kernel_cancels(shape, beta, kind):
    kernel = kernel_series(kind, 2, Duality.GR, beta, shape, order=4)
    inverse = kernel.inverse()
    point = random_point(shape, seed=7)
    for a in range(5):
        convolution = total(product((kernel[p], inverse[a - p])) for p in range(a + 1))
        assert convolution.evaluate(point) == (1 if a == 0 else 0)


def test_kernel_validation():
    with pytest.raises(ValueError):
        Kernel(kind=KernelKind.NONE, rank=1, order=-1)
    with pytest.raises(ValueError):
        Kernel(kind=KernelKind.BINOM, rank=1, order=2)


@pytest.mark.parametrize("duality", list(Duality))
def test_psi_splits_into_beta_free_and_integer_parts(shape, beta, duality):
    point = random_point(shape, seed=4)
    combined = kernel_psi(duality, beta, shape).evaluate(point)
    beta_free = kernel_psi(duality, beta, shape, include_beta=False).evaluate(point)
    assert combined == beta_free + beta_exponent(duality, beta)


def test_duality_rank(shape):
    assert duality_rank(Duality.GR, shape) == shape.s
    assert duality_rank(Duality.PAX_PAXY, shape) == shape.r
