from fractions import Fraction
from math import comb

import pytest

from quiverdual.algebra.expressions import evaluate, product, x, zgiv
from quiverdual.algebra.variables import ZGIV, x_var
from quiverdual.hypergeometric.pochhammer import (
    compositions,
    inverse_poch_ratio,
    poch_ratio,
)

VALUES = {x_var(1): Fraction(3, 7), ZGIV: Fraction(-2, 5)}


@pytest.mark.parametrize("total_, parts", [(0, 1), (3, 2), (4, 3), (2, 4)])
def test_composition_counts(total_, parts):
    found = compositions(total_, parts)
    assert len(found) == comb(total_ + parts - 1, parts - 1)
    assert found == sorted(found)
    assert all(sum(vec) == total_ and min(vec) >= 0 for vec in found)


def test_composition_lower_bound():
    assert compositions(1, 2, lower_bound=-1) == [(-1, 2), (0, 1), (1, 0), (2, -1)]
    with pytest.raises(ValueError):
        compositions(1, 0)


def test_positive_shift_divides():
    b, z = VALUES[x_var(1)], VALUES[ZGIV]
    assert evaluate(poch_ratio(x(1), zgiv(), 2), VALUES) == 1 / ((b + z) * (b + 2 * z))


def test_negative_shift_multiplies():
    b, z = VALUES[x_var(1)], VALUES[ZGIV]
    assert evaluate(poch_ratio(x(1), zgiv(), -2), VALUES) == b * (b - z)


@pytest.mark.parametrize("c", [-3, -1, 0, 1, 4])
def test_inverse_orientation(c):
    ratio = product((poch_ratio(x(1), zgiv(), c), inverse_poch_ratio(x(1), zgiv(), c)))
    assert evaluate(ratio, VALUES) == 1
