"""
Cycles of a quiver and their canonical form.

Cycles are enumerated on the networkx multidigraph of the quiver, one per
choice of parallel arrows, and reported as tuples of edge ids rotated to
their lexicographically smallest start.
"""
from itertools import product as cartesian
from typing import List, Sequence, Tuple

import networkx as nx

from quiverdual.quiver.models import Quiver


def canonical_rotation(cycle: Sequence[str]) -> Tuple[str, ...]:
    """
    The rotation of ``cycle`` that is lexicographically smallest.

    >>> canonical_rotation(("Y", "X", "P"))
    ('P', 'Y', 'X')
    """
    cycle = tuple(cycle)
    if not cycle:
        return cycle
    return min(cycle[i:] + cycle[:i] for i in range(len(cycle)))


def to_multidigraph(quiver: Quiver) -> nx.MultiDiGraph:
    graph = nx.MultiDiGraph()
    for node in quiver.nodes:
        graph.add_node(node.id, kind=node.kind.value, rank=node.rank, label=node.label)
    for edge in quiver.edges:
        graph.add_edge(edge.src, edge.dst, key=edge.id, frozen=edge.frozen)
    return graph


def cycles(quiver: Quiver, max_len: int) -> List[Tuple[str, ...]]:
    """
    All directed cycles of at most ``max_len`` edges, frozen edges included.

    Each cycle is a tuple of edge ids in walk order, reported once in its
    canonical rotation. Parallel edges give distinct cycles.

    Raises:
        ValueError: If ``max_len`` < 2.
    """
    if max_len < 2:
        raise ValueError(f"Cycles are searched up to length >= 2, got {max_len}")
    graph = to_multidigraph(quiver)
    simple = nx.DiGraph(graph)
    found = set()
    for node_cycle in nx.simple_cycles(simple, length_bound=max_len):
        steps = list(zip(node_cycle, node_cycle[1:] + node_cycle[:1]))
        choices = [list(graph[src][dst]) for src, dst in steps]
        for edge_ids in cartesian(*choices):
            found.add(canonical_rotation(edge_ids))
    return sorted(found, key=lambda c: (len(c), c))
