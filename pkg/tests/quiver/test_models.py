from fractions import Fraction

import pytest
from pydantic import ValidationError

from quiverdual.quiver.exceptions import QuiverDefinitionError
from quiverdual.quiver.models import Edge, Node, NodeKind, Quiver, SuperpotentialTerm


@pytest.fixture
def triangle():
    return Quiver(
        nodes=(
            Node(id="a", kind=NodeKind.GAUGE, rank=2),
            Node(id="b", kind=NodeKind.FRAMED, rank=1, label="B"),
        ),
        edges=(Edge(id="u", src="a", dst="b"), Edge(id="v", src="b", dst="a")),
        superpotential=(SuperpotentialTerm(coefficient="1/2", cycle=("u", "v")),),
    )


def test_node_validation():
    with pytest.raises(ValidationError):
        Node(id="a", kind=NodeKind.GAUGE, rank=0)
    with pytest.raises(ValidationError):
        Node(id="f", kind=NodeKind.FRAMED, rank=2)


def test_coefficients_are_rational(triangle):
    assert triangle.superpotential[0].coefficient == Fraction(1, 2)
    with pytest.raises(ValidationError):
        SuperpotentialTerm(coefficient=True, cycle=("u",))
    with pytest.raises(ValidationError):
        SuperpotentialTerm(coefficient=1, cycle=())


@pytest.mark.parametrize(
    "edges, cycle",
    [
        ((Edge(id="u", src="a", dst="c"),), None),
        ((Edge(id="u", src="a", dst="b"), Edge(id="u", src="b", dst="a")), None),
        ((Edge(id="u", src="a", dst="b"),), ("w",)),
        ((Edge(id="u", src="a", dst="b"),), ("u",)),
    ],
)
def test_structure_validation(edges, cycle):
    superpotential = (SuperpotentialTerm(coefficient=1, cycle=cycle),) if cycle else ()
    with pytest.raises(ValidationError):
        Quiver(
            nodes=(
                Node(id="a", kind=NodeKind.GAUGE, rank=1),
                Node(id="b", kind=NodeKind.GAUGE, rank=1),
            ),
            edges=edges,
            superpotential=superpotential,
        )


def test_lookups(triangle):
    assert triangle.node("b").label == "B"
    assert [e.id for e in triangle.incoming("a")] == ["v"]
    assert [e.id for e in triangle.outgoing("a")] == ["u"]
    assert [n.id for n in triangle.gauge_nodes()] == ["a"]
    assert triangle.frozen_edges() == []
    with pytest.raises(QuiverDefinitionError, match="nodes are"):
        triangle.node("c")
    with pytest.raises(QuiverDefinitionError):
        triangle.edge("w")


def test_json_file_round_trip(triangle, tmp_path):
    path = tmp_path / "triangle.json"
    triangle.write_to_file(path)
    assert '"coefficient": "1/2"' in path.read_text()
    assert Quiver.read_from_file(str(path)) == triangle
