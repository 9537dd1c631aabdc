from fractions import Fraction

import pytest

pytest.importorskip("sympy")

from quiverdual.algebra.exceptions import DegreeOverflow  # noqa: E402
from quiverdual.algebra.expressions import power, quotient, x, zgiv  # noqa: E402
from quiverdual.algebra.symbolic import expand_small, to_sympy  # noqa: E402
from quiverdual.algebra.variables import ZGIV, x_var  # noqa: E402


def test_to_sympy_uses_registry_names():
    import sympy

    converted = to_sympy(x(1) / zgiv() + 2)
    assert converted.free_symbols == {sympy.Symbol("x_1"), sympy.Symbol("z")}


def test_canonical_forms_compare_as_rational_functions():
    unreduced = expand_small(
        quotient(power(x(1), 2) - power(x(2), 2), x(1) - x(2)), max_degree=4
    )
    reduced = expand_small(x(1) + x(2), max_degree=4)
    assert unreduced.equals(reduced)
    assert not reduced.equals(expand_small(x(1) - x(2), max_degree=4))


def test_canonical_form_evaluates_like_expression():
    expr = (x(1) + 1) / (zgiv() - x(1))
    form = expand_small(expr, max_degree=2)
    values = {x_var(1): Fraction(2, 3), ZGIV: Fraction(5)}
    assert form.evaluate(values) == expr.evaluate(values)


def test_degree_overflow():
    with pytest.raises(DegreeOverflow):
        expand_small(power(x(1) + x(2), 5), max_degree=3)


def test_constant_expression():
    form = expand_small(x(1) - x(1) + Fraction(1, 2), max_degree=1)
    assert form.evaluate({}) == Fraction(1, 2)
