import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from quiverdual.determinantal.exceptions import DeterminantalException
from quiverdual.determinantal.numerology import (
    BaseKind,
    DetConfig,
    codim,
    cy_classify,
    cy_defect,
    dimension,
    singular_stratum,
)


@pytest.fixture
def gulliksen_negard():
    return DetConfig(m=4, n=4, s=2, base_kind=BaseKind.PROJ, base_dim=7)


def test_gulliksen_negard_threefold(gulliksen_negard):
    assert codim(gulliksen_negard) == 4
    assert dimension(gulliksen_negard) == 3
    assert cy_defect(gulliksen_negard) == 0


@pytest.mark.parametrize(
    "params",
    [
        {"m": 3, "n": 4, "s": 1},
        {"m": 3, "n": 2, "s": 3},
        {"m": 3, "n": 2, "s": -1},
        {"m": 3, "n": 2, "s": 1, "base_kind": "proj"},
        {"m": 3, "n": 2, "s": 1, "base_kind": "proj", "base_dim": 0},
        {"m": 3, "n": 2, "s": 1, "base_dim": 4},
    ],
)
def test_invalid_configs(params):
    with pytest.raises(ValidationError):
        DetConfig(**params)


def test_formal_base_has_no_dimension():
    with pytest.raises(DeterminantalException):
        dimension(DetConfig(m=3, n=2, s=1))


def test_cy_defect_needs_square_maps():
    with pytest.raises(DeterminantalException):
        cy_defect(DetConfig(m=3, n=2, s=1, base_kind=BaseKind.PROJ, base_dim=5))


def test_threefold_classification():
    assert cy_classify(8, 30) == [(4, 5, 4), (2, 4, 7), (1, 5, 19)]
    assert cy_classify(12, 60) == cy_classify(8, 30)


def test_surface_classification():
    assert cy_classify(8, 30, dimension=2) == [(3, 4, 3), (1, 4, 11)]


def test_small_bounds():
    assert cy_classify(1, 1) == []
    with pytest.raises(ValueError):
        cy_classify(0, 10)


def test_singular_stratum(gulliksen_negard):
    smaller = singular_stratum(gulliksen_negard)
    assert smaller.s == 1
    assert codim(smaller) == 9
    with pytest.raises(DeterminantalException):
        singular_stratum(DetConfig(m=2, n=1, s=0))


@given(st.integers(1, 9).flatmap(lambda m: st.tuples(st.just(m), st.integers(1, m))))
def test_codimension_grows_down_the_stratification(mn):
    m, n = mn
    for s in range(1, n + 1):
        cfg = DetConfig(m=m, n=n, s=s)
        assert codim(singular_stratum(cfg)) > codim(cfg)
