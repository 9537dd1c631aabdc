"""
Structural equality of quivers.

Two quivers are equal when some bijection of nodes preserves kind, rank and
framed label, some bijection of edges over it preserves endpoints and
frozen flags, and the superpotentials then agree as multisets of
(coefficient, cycle up to rotation), allowing one overall sign. The search
is exhaustive; the quivers compared here have a handful of nodes.
"""
from collections import Counter, defaultdict
from itertools import permutations, product
from typing import Dict, Iterator, List, Optional, Tuple

from quiverdual.quiver.cycles import canonical_rotation
from quiverdual.quiver.models import Edge, Node, Quiver

Mapping = Dict[str, str]


def _node_signature(node: Node) -> Tuple:
    return (node.kind.value, node.rank, node.label or "")


def _bijections(
    left: List[str],
    right: List[str],
    key_left: Dict[str, Tuple],
    key_right: Dict[str, Tuple],
) -> Iterator[Mapping]:
    """All bijections left -> right that preserve the grouping keys."""
    groups_left: Dict[Tuple, List[str]] = defaultdict(list)
    groups_right: Dict[Tuple, List[str]] = defaultdict(list)
    for item in left:
        groups_left[key_left[item]].append(item)
    for item in right:
        groups_right[key_right[item]].append(item)
    if {k: len(v) for k, v in groups_left.items()} != {
        k: len(v) for k, v in groups_right.items()
    }:
        return
    keys = sorted(groups_left, key=str)
    per_group = [
        [
            dict(zip(groups_left[key], image))
            for image in permutations(groups_right[key])
        ]
        for key in keys
    ]
    for choice in product(*per_group):
        merged: Mapping = {}
        for part in choice:
            merged.update(part)
        yield merged


def _edge_key(edge: Edge) -> Tuple:
    return (edge.src, edge.dst, edge.frozen)


def _superpotential(quiver: Quiver, edge_map: Mapping, sign: int) -> Counter:
    return Counter(
        (term.coefficient * sign, canonical_rotation(edge_map[e] for e in term.cycle))
        for term in quiver.superpotential
    )


def find_isomorphism(a: Quiver, b: Quiver) -> Optional[Tuple[Mapping, Mapping, int]]:
    """
    Returns (node map, edge map, sign) taking ``a`` onto ``b``, or None.
    """
    if len(a.nodes) != len(b.nodes) or len(a.edges) != len(b.edges):
        return None
    if len(a.superpotential) != len(b.superpotential):
        return None
    target = Counter(
        (term.coefficient, canonical_rotation(term.cycle)) for term in b.superpotential
    )
    node_maps = _bijections(
        [n.id for n in a.nodes],
        [n.id for n in b.nodes],
        {n.id: _node_signature(n) for n in a.nodes},
        {n.id: _node_signature(n) for n in b.nodes},
    )
    for node_map in node_maps:
        edge_key_a = {
            e.id: (node_map[e.src], node_map[e.dst], e.frozen) for e in a.edges
        }
        edge_key_b = {e.id: _edge_key(e) for e in b.edges}
        for edge_map in _bijections(
            [e.id for e in a.edges], [e.id for e in b.edges], edge_key_a, edge_key_b
        ):
            for sign in (1, -1):
                if _superpotential(a, edge_map, sign) == target:
                    return node_map, edge_map, sign
    return None


def quiver_equal(a: Quiver, b: Quiver) -> bool:
    return find_isomorphism(a, b) is not None

