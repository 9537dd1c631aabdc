"""Constructors for the quivers on either side of the dualities."""
from itertools import product as cartesian
from typing import List

from quiverdual.quiver.exceptions import RankError
from quiverdual.quiver.models import Edge, Node, NodeKind, Quiver, SuperpotentialTerm

GAUGE = "gauge"


def _check_bundle_ranks(m: int, n: int, gauge_rank: int, name: str) -> None:
    if n < 1 or m < n:
        raise RankError(f"Need 1 <= n <= m, got m={m}, n={n}")
    if not 1 <= gauge_rank <= m - 1:
        raise RankError(f"Need 1 <= {name} <= m - 1, got {name}={gauge_rank}, m={m}")


def _frames(m: int, n: int) -> List[Node]:
    return [
        Node(id="E", kind=NodeKind.FRAMED, rank=m, label="E"),
        Node(id="F", kind=NodeKind.FRAMED, rank=n, label="F"),
    ]


def build_grassmannian_bundle(m: int, n: int, r: int) -> Quiver:
    """F --P--> (r) --X--> E, no cycles: the total space of S_r (x) F^vee."""
    _check_bundle_ranks(m, n, r, "r")
    return Quiver(
        nodes=tuple(_frames(m, n)) + (Node(id=GAUGE, kind=NodeKind.GAUGE, rank=r),),
        edges=(
            Edge(id="X", src=GAUGE, dst="E"),
            Edge(id="P", src="F", dst=GAUGE),
        ),
    )


def build_dual_grassmannian_bundle(m: int, n: int, s: int) -> Quiver:
    """E --X--> (s) --Y--> F --P--> E with superpotential -tr(PYX)."""
    _check_bundle_ranks(m, n, s, "s")
    return Quiver(
        nodes=tuple(_frames(m, n)) + (Node(id=GAUGE, kind=NodeKind.GAUGE, rank=s),),
        edges=(
            Edge(id="X", src="E", dst=GAUGE),
            Edge(id="Y", src=GAUGE, dst="F"),
            Edge(id="P", src="F", dst="E"),
        ),
        superpotential=(SuperpotentialTerm(coefficient=-1, cycle=("X", "Y", "P")),),
    )


def build_pax(m: int, n: int, r: int) -> Quiver:
    """
    The PAX quiver: the Grassmannian-bundle quiver plus the fixed section
    A: E -> F as a frozen edge, with superpotential tr(PAX).

    Raises:
        RankError: Unless 1 <= n <= m and 1 <= r <= m - 1.
    """
    _check_bundle_ranks(m, n, r, "r")
    return Quiver(
        nodes=tuple(_frames(m, n)) + (Node(id=GAUGE, kind=NodeKind.GAUGE, rank=r),),
        edges=(
            Edge(id="X", src=GAUGE, dst="E"),
            Edge(id="A", src="E", dst="F", frozen=True),
            Edge(id="P", src="F", dst=GAUGE),
        ),
        superpotential=(SuperpotentialTerm(coefficient=1, cycle=("X", "A", "P")),),
    )


def build_paxy(m: int, n: int, s: int) -> Quiver:
    """
    The PAXY quiver with superpotential tr(P(A - YX)).

    Raises:
        RankError: Unless 1 <= n <= m and 1 <= s <= m - 1.
    """
    _check_bundle_ranks(m, n, s, "s")
    return Quiver(
        nodes=tuple(_frames(m, n)) + (Node(id=GAUGE, kind=NodeKind.GAUGE, rank=s),),
        edges=(
            Edge(id="X", src="E", dst=GAUGE),
            Edge(id="Y", src=GAUGE, dst="F"),
            Edge(id="P", src="F", dst="E"),
            Edge(id="A", src="E", dst="F", frozen=True),
        ),
        superpotential=(
            SuperpotentialTerm(coefficient=1, cycle=("A", "P")),
            SuperpotentialTerm(coefficient=-1, cycle=("X", "Y", "P")),
        ),
    )


def build_gn_extension(m: int, n: int, r: int) -> Quiver:
    """
    A rank-r gauge node framed by C^m and feeding n arrows into the quiver
    whose critical locus is the Gulliksen-Negard threefold:

        [m] -1-> (r) -n-> (1) -2-> [4] -1-> (2) -4-> (1)

    Each 3-cycle through (1), [4] and (2) enters the superpotential with
    coefficient 1.
    """
    if m < 1 or n < 1:
        raise RankError(f"Need m, n >= 1, got m={m}, n={n}")
    if not 1 <= r < max(m, n):
        raise RankError(f"Need 1 <= r < max(m, n), got r={r}")
    nodes = (
        Node(id="frame_m", kind=NodeKind.FRAMED, rank=m, label="C^m"),
        Node(id=GAUGE, kind=NodeKind.GAUGE, rank=r),
        Node(id="gauge_1", kind=NodeKind.GAUGE, rank=1),
        Node(id="frame_4", kind=NodeKind.FRAMED, rank=4, label="C^4"),
        Node(id="gauge_2", kind=NodeKind.GAUGE, rank=2),
    )
    edges = [Edge(id="U", src="frame_m", dst=GAUGE)]
    edges += [Edge(id=f"B{i}", src=GAUGE, dst="gauge_1") for i in range(1, n + 1)]
    edges += [Edge(id=f"C{i}", src="gauge_1", dst="frame_4") for i in range(1, 3)]
    edges += [Edge(id="D", src="frame_4", dst="gauge_2")]
    edges += [Edge(id=f"G{i}", src="gauge_2", dst="gauge_1") for i in range(1, 5)]
    superpotential = tuple(
        SuperpotentialTerm(coefficient=1, cycle=(f"C{c}", "D", f"G{g}"))
        for c, g in cartesian(range(1, 3), range(1, 5))
    )
    return Quiver(nodes=nodes, edges=tuple(edges), superpotential=superpotential)
