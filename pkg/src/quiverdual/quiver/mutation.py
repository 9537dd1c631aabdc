"""
Mutation of a quiver with superpotential at a gauge node k.

1. Every path i -a-> k -b-> j gets a composite arrow ``[ba]``: i -> j, and
   the non-frozen arrows at k are reversed (``a'`` and ``b'``).
2. The rank of k becomes max(N_in, N_out) - rank(k), where N_in (N_out)
   sums the ranks at the far end of each incoming (outgoing) arrow.
3. Non-frozen 2-cycles formed by a composite and an opposite arrow are
   deleted.
4. Each surviving composite closes the 3-cycle ``([ba], b', a')``, which
   enters the superpotential with coefficient -1.

Frozen arrows count in N_in and N_out and form composites, but are never
reversed or deleted. Old superpotential cycles through k have each
consecutive pair (a, b) replaced by ``[ba]``; a cycle that loses an arrow
to step 3 is dropped with a warning.
"""
import logging
from typing import Dict, List, Optional, Sequence, Set, Tuple

from quiverdual.quiver.exceptions import (
    NotGaugeNode,
    QuiverDefinitionError,
    RankError,
    SuperpotentialCycleRemovedWarning,
)
from quiverdual.quiver.models import (
    Edge,
    MutationResult,
    NodeKind,
    Quiver,
    SuperpotentialTerm,
)
from quiverdual.reporting.log_utils import warn_and_log

logger = logging.getLogger(__name__)

NEW_CYCLE_COEFFICIENT = -1


def composite_id(incoming: Edge, outgoing: Edge) -> str:
    return f"[{outgoing.id}{incoming.id}]"


def reversed_id(edge: Edge) -> str:
    return f"{edge.id}'"


def mutated_rank(quiver: Quiver, k: str) -> int:
    """max(N_in, N_out) - rank(k), with each arrow weighted by its far end."""
    n_in = sum(quiver.node(e.src).rank for e in quiver.incoming(k) if e.src != k)
    n_out = sum(quiver.node(e.dst).rank for e in quiver.outgoing(k) if e.dst != k)
    return max(n_in, n_out) - quiver.node(k).rank


def _rewrite_cycle(
    cycle: Sequence[str], edges: Dict[str, Edge], k: str
) -> Tuple[str, ...]:
    """Replaces each (a into k, b out of k) pair of a closed walk by [ba]."""
    walk = [edges[edge_id] for edge_id in cycle]
    if all(edge.src == k for edge in walk):
        return tuple(cycle)
    start = next(i for i, edge in enumerate(walk) if edge.src != k)
    walk = walk[start:] + walk[:start]
    rewritten: List[str] = []
    i = 0
    while i < len(walk):
        edge = walk[i]
        if edge.dst == k:
            rewritten.append(composite_id(edge, walk[i + 1]))
            i += 2
        else:
            rewritten.append(edge.id)
            i += 1
    return tuple(rewritten)


def _delete_two_cycles(
    composites: List[Edge], others: List[Edge]
) -> Tuple[Set[str], List[Tuple[str, str]]]:
    """Pairs each non-frozen composite with one opposite non-frozen arrow."""
    deleted: Set[str] = set()
    pairs: List[Tuple[str, str]] = []
    for composite in composites:
        if composite.frozen or composite.id in deleted:
            continue
        partner: Optional[Edge] = next(
            (
                edge
                for edge in others + composites
                if not edge.frozen
                and edge.id not in deleted
                and edge.id != composite.id
                and edge.src == composite.dst
                and edge.dst == composite.src
            ),
            None,
        )
        if partner is not None:
            deleted.update((composite.id, partner.id))
            pairs.append((composite.id, partner.id))
    return deleted, pairs


def mutate(quiver: Quiver, k: str) -> MutationResult:
    """
    Mutates ``quiver`` at gauge node ``k``.

    Returns:
        MutationResult: The new quiver and what changed.

    Raises:
        NotGaugeNode: If ``k`` is a framed node.
        RankError: If the new rank would not be positive.
        QuiverDefinitionError: If ``k`` carries a loop.
    """
    node = quiver.node(k)
    if node.kind is not NodeKind.GAUGE:
        raise NotGaugeNode(f"Node {k!r} is framed; only gauge nodes mutate")
    if any(edge.src == k and edge.dst == k for edge in quiver.edges):
        raise QuiverDefinitionError(f"Node {k!r} carries a loop and cannot mutate")

    new_rank = mutated_rank(quiver, k)
    if new_rank < 1:
        raise RankError(
            f"Mutation at {k!r} gives rank {new_rank}; the neighbourhood of a "
            f"rank-{node.rank} node is too small"
        )

    incoming = quiver.incoming(k)
    outgoing = quiver.outgoing(k)
    others = [edge for edge in quiver.edges if k not in (edge.src, edge.dst)]
    composites = [
        Edge(
            id=composite_id(a, b),
            src=a.src,
            dst=b.dst,
            frozen=a.frozen and b.frozen,
        )
        for a in incoming
        for b in outgoing
    ]
    reversed_edges = {
        edge.id: Edge(id=reversed_id(edge), src=edge.dst, dst=edge.src)
        for edge in incoming + outgoing
        if not edge.frozen
    }
    kept_at_k = [edge for edge in incoming + outgoing if edge.frozen]

    deleted, deleted_pairs = _delete_two_cycles(composites, others)

    edges = quiver.edge_map
    superpotential: List[SuperpotentialTerm] = []
    removed: List[SuperpotentialTerm] = []
    for term in quiver.superpotential:
        cycle = _rewrite_cycle(term.cycle, edges, k)
        if any(edge_id in deleted for edge_id in cycle):
            removed.append(term)
            warn_and_log(
                f"Superpotential cycle {term.cycle} vanishes with a deleted "
                f"2-cycle at {k!r}",
                SuperpotentialCycleRemovedWarning,
            )
            continue
        superpotential.append(
            SuperpotentialTerm(coefficient=term.coefficient, cycle=cycle)
        )

    added_cycles = []
    for a in incoming:
        for b in outgoing:
            cid = composite_id(a, b)
            if cid in deleted or a.frozen or b.frozen:
                continue
            added_cycles.append(
                SuperpotentialTerm(
                    coefficient=NEW_CYCLE_COEFFICIENT,
                    cycle=(cid, reversed_id(b), reversed_id(a)),
                )
            )

    surviving_composites = [edge for edge in composites if edge.id not in deleted]
    new_edges = (
        [edge for edge in others if edge.id not in deleted]
        + kept_at_k
        + surviving_composites
        + list(reversed_edges.values())
    )
    new_nodes = tuple(
        n.model_copy(update={"rank": new_rank}) if n.id == k else n
        for n in quiver.nodes
    )
    mutated = Quiver(
        nodes=new_nodes,
        edges=tuple(new_edges),
        superpotential=tuple(superpotential + added_cycles),
    )
    logger.debug(
        "mutated %r: rank %d -> %d, %d composites, %d deleted pairs",
        k,
        node.rank,
        new_rank,
        len(surviving_composites),
        len(deleted_pairs),
    )
    return MutationResult(
        quiver=mutated,
        node=k,
        new_gauge_rank=new_rank,
        added_edges=tuple(edge.id for edge in surviving_composites),
        reversed_edges=tuple(edge.id for edge in reversed_edges.values()),
        deleted_pairs=tuple(deleted_pairs),
        added_cycles=tuple(added_cycles),
        removed_cycles=tuple(removed),
    )
