"""Matching extendability and factor-criticality: deciders with witnesses,
extremal graph families, and exhaustive claim verification over small graphs."""

from .families import FamilySpec, family_G, family_H, tightness_witness
from .graph import (
    Graph,
    build_basic,
    cross_edge_count,
    delete_edge,
    delete_vertices,
    from_graph6,
    is_bipartite,
    is_connected,
    join,
    min_degree,
    to_graph6,
    union,
    vertex_connectivity,
)
from .matching import (
    Matching,
    brute_force_max_matching,
    enumerate_matchings,
    extends_to_perfect,
    has_perfect_matching,
    maximum_matching,
)
from .properties import (
    Verdict,
    is_balanced_bipartite_critical,
    is_factor_critical,
    is_half_extendable,
    is_k_extendable,
    is_minimal,
    profile,
)

__version__ = "0.1.0"

__all__ = [
    "FamilySpec", "family_G", "family_H", "tightness_witness",
    "Graph", "build_basic", "cross_edge_count", "delete_edge", "delete_vertices",
    "from_graph6", "is_bipartite", "is_connected", "join", "min_degree", "to_graph6",
    "union", "vertex_connectivity",
    "Matching", "brute_force_max_matching", "enumerate_matchings", "extends_to_perfect",
    "has_perfect_matching", "maximum_matching",
    "Verdict", "is_balanced_bipartite_critical", "is_factor_critical", "is_half_extendable",
    "is_k_extendable", "is_minimal", "profile",
]
