"""Edge-equivalence classes, quasi-transitive 2-edge-colourings, and
quasi-transitive orientations of undirected simple graphs."""

from .classes import EdgeClassPartition, class_of_edge, compute_classes, verify_partition_laws
from .colouring import (
    Colourability,
    ColourabilityClass,
    EdgeColouring,
    classify_colourability,
    count_colourings,
    count_homogeneous_witness_classes,
    enumerate_colourings,
    find_homogeneous_witness,
    is_quasi_transitive_colouring,
)
from .errors import (
    ContractError,
    FormatError,
    InfeasibilityError,
    QT2ECError,
    RefusalError,
)
from .graph import (
    Graph,
    edge_subgraph,
    encode_graph6,
    format_edge_list,
    induced_p3s,
    induced_subgraph,
    is_complete_multipartite,
    is_connected,
    is_module_set,
    parse_edge_list,
    parse_graph6,
    to_dot,
)
from .orientation import (
    Orientation,
    OrientationFeasibility,
    enumerate_orientations,
    is_quasi_transitive_orientation,
    orientability,
    partial_orientation,
    same_gamma_class,
)
from .oracle import (
    SweepConfig,
    brute_force_colouring_count,
    brute_force_orientation_count,
    enumerate_labeled_graphs,
    sample_connected_graphs,
    subset_witness_count,
    theorem_sweep,
)
from .report import CheckResult, VerificationReport
from .structure import (
    ClassPairRelation,
    ThreeClassOutcome,
    check_crossing_lemmas,
    check_tinylemma_instances,
    class_pair_relation,
    three_class_classification,
)

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "ClassPairRelation",
    "Colourability",
    "ColourabilityClass",
    "ContractError",
    "EdgeClassPartition",
    "EdgeColouring",
    "FormatError",
    "Graph",
    "InfeasibilityError",
    "Orientation",
    "OrientationFeasibility",
    "QT2ECError",
    "RefusalError",
    "SweepConfig",
    "ThreeClassOutcome",
    "VerificationReport",
    "brute_force_colouring_count",
    "brute_force_orientation_count",
    "check_crossing_lemmas",
    "check_tinylemma_instances",
    "class_of_edge",
    "class_pair_relation",
    "classify_colourability",
    "compute_classes",
    "count_colourings",
    "count_homogeneous_witness_classes",
    "edge_subgraph",
    "encode_graph6",
    "enumerate_colourings",
    "enumerate_labeled_graphs",
    "enumerate_orientations",
    "find_homogeneous_witness",
    "format_edge_list",
    "induced_p3s",
    "induced_subgraph",
    "is_complete_multipartite",
    "is_connected",
    "is_module_set",
    "is_quasi_transitive_colouring",
    "is_quasi_transitive_orientation",
    "orientability",
    "parse_edge_list",
    "parse_graph6",
    "partial_orientation",
    "same_gamma_class",
    "sample_connected_graphs",
    "subset_witness_count",
    "theorem_sweep",
    "three_class_classification",
    "to_dot",
    "verify_partition_laws",
]
