from pathlib import Path

import pytest

from quiverdual.localization.models import BetaClass, ModelShape


@pytest.fixture
def data_folder_path():
    tests_folder_path = Path(__file__)
    data_folder_path = tests_folder_path.parent / "data"
    return data_folder_path


@pytest.fixture
def shape_geq2() -> ModelShape:
    return ModelShape(m=3, n=1, r=1)


@pytest.fixture
def shape_plus1() -> ModelShape:
    return ModelShape(m=3, n=2, r=1)


@pytest.fixture
def shape_equal() -> ModelShape:
    return ModelShape(m=2, n=2, r=1)


@pytest.fixture
def beta_geq2() -> BetaClass:
    return BetaClass(bx=(1, 0, -1), bz=(0,))


@pytest.fixture
def beta_plus1() -> BetaClass:
    return BetaClass(bx=(1, 2, 0), bz=(-1, 0))


@pytest.fixture
def beta_equal() -> BetaClass:
    return BetaClass(bx=(1, 0), bz=(0, -1))
