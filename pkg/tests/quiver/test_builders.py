import pytest

from quiverdual.quiver.builders import (
    build_dual_grassmannian_bundle,
    build_gn_extension,
    build_grassmannian_bundle,
    build_pax,
    build_paxy,
)
from quiverdual.quiver.exceptions import RankError
from quiverdual.quiver.models import NodeKind


@pytest.mark.parametrize(
    "builder",
    [build_grassmannian_bundle, build_dual_grassmannian_bundle, build_pax, build_paxy],
)
@pytest.mark.parametrize("m, n, rank", [(3, 4, 1), (3, 0, 1), (3, 2, 0), (3, 2, 3)])
def test_bundle_rank_checks(builder, m, n, rank):
    with pytest.raises(RankError):
        builder(m, n, rank)


def test_pax_frozen_section():
    pax = build_pax(4, 2, 1)
    assert [e.id for e in pax.frozen_edges()] == ["A"]
    assert pax.node("E").rank == 4 and pax.node("F").rank == 2
    assert pax.node("gauge").rank == 1


def test_paxy_superpotential():
    paxy = build_paxy(4, 2, 3)
    assert [(t.coefficient, t.cycle) for t in paxy.superpotential] == [
        (1, ("A", "P")),
        (-1, ("X", "Y", "P")),
    ]


def test_gn_extension_layout():
    quiver = build_gn_extension(3, 2, 1)
    gauge = [(n.id, n.rank) for n in quiver.gauge_nodes()]
    assert gauge == [("gauge", 1), ("gauge_1", 1), ("gauge_2", 2)]
    framed = [n.rank for n in quiver.nodes if n.kind is NodeKind.FRAMED]
    assert framed == [3, 4]
    assert len(quiver.outgoing("gauge")) == 2
    assert len(quiver.superpotential) == 8


def test_gn_extension_rank_checks():
    with pytest.raises(RankError):
        build_gn_extension(2, 3, 3)
    with pytest.raises(RankError):
        build_gn_extension(0, 3, 1)
