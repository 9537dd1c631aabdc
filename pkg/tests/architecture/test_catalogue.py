from abc import ABC, abstractmethod
from typing import Callable

import pytest

from quiverdual.architecture.catalogue import Catalogue


class Preset(ABC):
    @abstractmethod
    def build(self):
        pass


class EmptyPreset(Preset):
    def build(self):
        return ()


class Shape:
    pass


@pytest.fixture
def presets():
    return Catalogue(Preset)


def test_register_and_get(presets):
    preset = EmptyPreset()
    presets.register("empty", preset)
    assert presets.get("empty") is preset
    assert presets.get("empty").build() == ()


def test_register_wrong_type(presets):
    with pytest.raises(TypeError):
        presets.register("shape", Shape())


def test_register_class_of_wrong_type(presets):
    with pytest.raises(TypeError) as excinfo:

        @presets.register_decorator("shape")
        class ShapePreset(Shape):
            pass

    assert "not a subclass of Preset" in str(excinfo.value)


def test_decorator_returns_the_class(presets):
    @presets.register_decorator("decorated")
    class Decorated(EmptyPreset):
        pass

    assert presets.get("decorated") is Decorated
    assert Decorated().build() == ()


def test_duplicate_name(presets):
    presets.register("empty", EmptyPreset())
    with pytest.raises(ValueError):
        presets.register("empty", EmptyPreset())


def test_remove(presets):
    presets.register("empty", EmptyPreset())
    presets.remove("empty")
    assert presets.list_items() == []
    with pytest.raises(ValueError):
        presets.remove("empty")


def test_get_missing_lists_available(presets):
    presets.register("empty", EmptyPreset())
    with pytest.raises(ValueError, match="Available: empty"):
        presets.get("gn_3fold")


def test_list_items_keeps_registration_order(presets):
    for name in ("theorems", "lemma_forms", "quiver"):
        presets.register(name, EmptyPreset())
    assert presets.list_items() == ["theorems", "lemma_forms", "quiver"]


def test_callable_catalogue():
    suites = Catalogue(Callable)

    def smoke(config):
        return iter([config])

    suites.register("smoke", smoke)
    assert list(suites.get("smoke")(1)) == [1]
    with pytest.raises(TypeError):
        suites.register("broken", "not callable")
