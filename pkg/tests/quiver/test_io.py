import pytest

from quiverdual.quiver.builders import build_pax, build_paxy
from quiverdual.quiver.exceptions import QuiverDefinitionError
from quiverdual.quiver.io import load_quiver, quiver_from_json, quiver_to_json, to_dot


def test_json_is_canonical():
    text = quiver_to_json(build_pax(3, 1, 1))
    assert quiver_from_json(text) == build_pax(3, 1, 1)
    keys = [text.index(key) for key in ('"edges"', '"nodes"', '"superpotential"')]
    assert keys == sorted(keys)


def test_stored_quiver_matches_builder(data_folder_path):
    assert load_quiver(data_folder_path / "pax_3_1_1.json") == build_pax(3, 1, 1)


@pytest.mark.parametrize(
    "text",
    ["{}", '{"nodes": [{"id": "a", "kind": "gauge", "rank": 0}]}', "not json"],
)
def test_invalid_json(text):
    with pytest.raises(QuiverDefinitionError):
        quiver_from_json(text)


def test_dot_rendering():
    dot = to_dot(build_paxy(4, 2, 3), name="paxy")
    assert dot.startswith('digraph "paxy" {')
    assert '"E" [shape=box, label="E (4)"];' in dot
    assert '"gauge" [shape=circle, label="3"];' in dot
    assert '"E" -> "F" [label="A", style=dashed];' in dot
    assert '"F" -> "E" [label="P"];' in dot
    assert 'label="W = + 1*tr(A P) - 1*tr(X Y P)";' in dot
