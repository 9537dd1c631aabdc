from quiverdual.quiver.builders import (
    build_dual_grassmannian_bundle,
    build_gn_extension,
    build_grassmannian_bundle,
    build_pax,
    build_paxy,
)
from quiverdual.quiver.cycles import canonical_rotation, cycles
from quiverdual.quiver.io import quiver_from_json, quiver_to_json, to_dot
from quiverdual.quiver.isomorphism import find_isomorphism, quiver_equal
from quiverdual.quiver.models import (
    Edge,
    MutationResult,
    Node,
    NodeKind,
    Quiver,
    SuperpotentialTerm,
)
from quiverdual.quiver.mutation import mutate, mutated_rank

__all__ = [
    "Edge",
    "MutationResult",
    "Node",
    "NodeKind",
    "Quiver",
    "SuperpotentialTerm",
    "build_dual_grassmannian_bundle",
    "build_gn_extension",
    "build_grassmannian_bundle",
    "build_pax",
    "build_paxy",
    "canonical_rotation",
    "cycles",
    "find_isomorphism",
    "mutate",
    "mutated_rank",
    "quiver_equal",
    "quiver_from_json",
    "quiver_to_json",
    "to_dot",
]
