"""Frank number toolkit for 3-edge-connected cubic graphs.

Decides whether two orientations suffice to make every edge deletable
(heuristically, exactly, or by brute force on tiny graphs), constructs
flow-based orientation families, and verifies the resulting certificates.
"""

from ._core import (
    FlowEdgeClass,
    FrankCertificate,
    FranknoError,
    Graph,
    GroupFlow,
    HeuristicWitness,
    InstanceClass,
    IntFlow,
    Orientation,
    VerifyReport,
    certificate_from_json,
    certificate_from_witness,
    certificate_to_json,
    classify,
    cyclic_edge_connectivity_at_least,
    deletable_by_definition,
    deletable_edges,
    edge_connectivity_at_least,
    exact_frank2,
    find_z2z2_flow,
    find_z2z3_flow,
    flow_guaranteed_deletable,
    four_orientations,
    frank_number_bruteforce,
    heuristic_frank2,
    is_all_positive,
    is_deletable,
    is_nowhere_zero,
    is_strong,
    oddness,
    orientations_from_4flow,
    parse_graph6,
    reverse,
    three_edge_colouring,
    verify_certificate,
    verify_flow,
    write_graph6,
)

__all__ = [
    "FlowEdgeClass",
    "FrankCertificate",
    "FranknoError",
    "Graph",
    "GroupFlow",
    "HeuristicWitness",
    "InstanceClass",
    "IntFlow",
    "Orientation",
    "VerifyReport",
    "certificate_from_json",
    "certificate_from_witness",
    "certificate_to_json",
    "classify",
    "cyclic_edge_connectivity_at_least",
    "deletable_by_definition",
    "deletable_edges",
    "edge_connectivity_at_least",
    "exact_frank2",
    "find_z2z2_flow",
    "find_z2z3_flow",
    "flow_guaranteed_deletable",
    "four_orientations",
    "frank_number_bruteforce",
    "heuristic_frank2",
    "is_all_positive",
    "is_deletable",
    "is_nowhere_zero",
    "is_strong",
    "oddness",
    "orientations_from_4flow",
    "parse_graph6",
    "reverse",
    "three_edge_colouring",
    "verify_certificate",
    "verify_flow",
    "write_graph6",
]

__version__ = "0.1.0"
