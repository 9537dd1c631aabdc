from quiverdual.quiver.builders import (
    build_dual_grassmannian_bundle,
    build_pax,
    build_paxy,
)
from quiverdual.quiver.isomorphism import find_isomorphism, quiver_equal
from quiverdual.quiver.models import Edge, Node, NodeKind, Quiver, SuperpotentialTerm


def _relabelled_paxy():
    return Quiver(
        nodes=(
            Node(id="v", kind=NodeKind.GAUGE, rank=2),
            Node(id="right", kind=NodeKind.FRAMED, rank=3, label="F"),
            Node(id="left", kind=NodeKind.FRAMED, rank=5, label="E"),
        ),
        edges=(
            Edge(id="s", src="left", dst="right", frozen=True),
            Edge(id="q", src="right", dst="left"),
            Edge(id="y", src="v", dst="right"),
            Edge(id="x", src="left", dst="v"),
        ),
        superpotential=(
            SuperpotentialTerm(coefficient=-1, cycle=("y", "q", "x")),
            SuperpotentialTerm(coefficient=1, cycle=("q", "s")),
        ),
    )


def test_relabelling_is_found():
    found = find_isomorphism(_relabelled_paxy(), build_paxy(5, 3, 2))
    assert found is not None
    node_map, edge_map, sign = found
    assert node_map == {"v": "gauge", "right": "F", "left": "E"}
    assert edge_map == {"s": "A", "q": "P", "y": "Y", "x": "X"}
    assert sign == 1


def test_overall_sign_is_allowed():
    negated = build_dual_grassmannian_bundle(4, 2, 3).model_copy(
        update={
            "superpotential": (
                SuperpotentialTerm(coefficient=1, cycle=("X", "Y", "P")),
            )
        }
    )
    found = find_isomorphism(negated, build_dual_grassmannian_bundle(4, 2, 3))
    assert found is not None and found[2] == -1


def test_ranks_labels_and_frozen_flags_matter():
    assert not quiver_equal(build_paxy(5, 3, 2), build_paxy(5, 3, 3))
    assert not quiver_equal(build_paxy(5, 3, 2), build_paxy(5, 2, 2))
    thawed = build_paxy(5, 3, 2)
    thawed = thawed.model_copy(
        update={
            "edges": tuple(e.model_copy(update={"frozen": False}) for e in thawed.edges)
        }
    )
    assert not quiver_equal(thawed, build_paxy(5, 3, 2))


def test_superpotentials_must_agree():
    assert not quiver_equal(build_pax(4, 2, 1), build_paxy(4, 2, 1))
    stripped = build_paxy(4, 2, 3).model_copy(update={"superpotential": ()})
    assert not quiver_equal(stripped, build_paxy(4, 2, 3))
