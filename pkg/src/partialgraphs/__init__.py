"""Minimal partial graphs of a planar conjugated triangulation.

Canonical closed and open minimal graphs, their balanced orientations and
Euler circuits, the conjugate graph over the cut-point edges, and the
constrained 3-label signings, each cross-checked by brute force.
"""

from .conjugate import (
    AdjacencyMatrix,
    ConjugateGraph,
    adjacency_matrix,
    chromatic_number,
    restricted_line_graph,
)
from .euler import (
    FaceProfile,
    FaceStatus,
    Orientation,
    classify_exit_entry,
    count_euler_circuits,
    enumerate_balanced_orientations,
    euler_circuit,
    face_cycle_profile,
)
from .graph import (
    DirectedEdge,
    Edge,
    EmbeddedGraph,
    Face,
    FaceTag,
    GraphError,
    build_graph,
    cut_vertices,
    trace_faces,
)
from .minimal import EdgeRole, closed_minimal, edge_roles, open_minimal
from .report import VerificationReport, verify_all
from .signing import (
    FreeEdgeResolution,
    Signing,
    SigningError,
    all_signings,
    check_proper_on_conjugate,
    derive_signing,
    free_edge_resolutions,
    proper_labelings,
)
from .variants import (
    DistanceOnePair,
    OpenVariant,
    distance_one_pairs,
    enumerate_open_variants,
    feasible_balanced,
)

__all__ = [
    "AdjacencyMatrix", "ConjugateGraph", "DirectedEdge", "DistanceOnePair", "Edge",
    "EdgeRole", "EmbeddedGraph", "Face", "FaceProfile", "FaceStatus", "FaceTag",
    "FreeEdgeResolution", "GraphError", "OpenVariant", "Orientation", "Signing",
    "SigningError", "VerificationReport", "adjacency_matrix", "all_signings",
    "build_graph", "check_proper_on_conjugate", "chromatic_number",
    "classify_exit_entry", "closed_minimal", "count_euler_circuits", "cut_vertices",
    "derive_signing", "distance_one_pairs", "edge_roles",
    "enumerate_balanced_orientations", "enumerate_open_variants", "euler_circuit",
    "face_cycle_profile", "feasible_balanced", "free_edge_resolutions",
    "open_minimal", "proper_labelings", "restricted_line_graph", "trace_faces",
    "verify_all",
]
