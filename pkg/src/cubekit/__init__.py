"""Partial cubes: Θ-classes, hypercube embeddings, convex cycles and graph-class tests."""

__version__ = "0.1.0"

from .classes import ClassMembershipReport, class_report, is_almost_median, is_median, is_semi_median, is_tiled
from .classify import Classification, classify, verify_hypercube, verify_isomorphism
from .convexity import (
    ConvexCycleSet,
    CycleSubgraph,
    enumerate_convex_cycles,
    enumerate_convex_cycles_bruteforce,
    is_convex_cycle,
    is_convex_set,
)
from .families import build_family, corpus, doubled_odd, even_cycle, hypercube, parse_family, q3_minus
from .graph import Graph, all_pairs_distances, from_edge_list, girth
from .theta import HypercubeLabeling, ThetaPartition, is_partial_cube, labeling, theta_partition

__all__ = [
    "Classification",
    "ClassMembershipReport",
    "ConvexCycleSet",
    "CycleSubgraph",
    "Graph",
    "HypercubeLabeling",
    "ThetaPartition",
    "all_pairs_distances",
    "build_family",
    "class_report",
    "classify",
    "corpus",
    "doubled_odd",
    "enumerate_convex_cycles",
    "enumerate_convex_cycles_bruteforce",
    "even_cycle",
    "from_edge_list",
    "girth",
    "hypercube",
    "is_almost_median",
    "is_convex_cycle",
    "is_convex_set",
    "is_median",
    "is_partial_cube",
    "is_semi_median",
    "is_tiled",
    "labeling",
    "parse_family",
    "q3_minus",
    "theta_partition",
    "verify_hypercube",
    "verify_isomorphism",
]
