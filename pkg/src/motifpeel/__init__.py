"""Motif-conductance graph clustering by greedy peeling.

The toolkit finds a vertex cluster minimizing k-clique motif conductance:
`psmc` peels on exact instance counts and carries a provable approximation
bound against the exhaustive oracle; `psmc_plus` peels on density/coloring
bounds instead and recomputes its final conductance exactly.
"""

from .bounds import (
    BoundEstimate,
    Coloring,
    colorful_star_degree,
    colorful_wedge_degree,
    diagnostic_rows,
    erdos_lower,
    estimate_local_counts,
    estimate_motif_degree,
    greedy_color,
    psmc_plus,
    turan_clique_order,
    turan_lower,
)
from .errors import (
    EdgeListParseError,
    GeneratorConfigError,
    MotifPeelError,
    NoAdmissiblePrefixError,
    NoMotifError,
    OracleTooLargeError,
    UndefinedResultError,
)
from .generators import GeneratedGraph, GeneratorConfig, generate, write_ground_truth
from .graph import (
    Graph,
    VertexSet,
    degeneracy_order_of,
    induced_neighbors,
    ingest_edge_list,
    write_edge_list,
)
from .metrics import f1_score, metrics_report, read_communities
from .motifs import (
    Conductance,
    MotifStats,
    WeightedMotifGraph,
    build_weighted_motif_graph,
    count_cliques_within,
    cut_and_vol,
    enumerate_cliques,
    local_counts,
    motif_conductance,
    motif_degrees,
    weighted_conductance,
    write_weighted_edge_list,
)
from .oracle import (
    ORACLE_VERTEX_LIMIT,
    Certification,
    OracleResult,
    brute_force_optimum,
    certify_ratio,
    retention_scores,
)
from .peeling import ClusterResult, PeelState, PeelStep, PeelTrace, psmc, sweep_select, trace_to_csv

__all__ = [
    "BoundEstimate",
    "Certification",
    "ClusterResult",
    "Coloring",
    "Conductance",
    "EdgeListParseError",
    "GeneratedGraph",
    "GeneratorConfig",
    "GeneratorConfigError",
    "Graph",
    "MotifPeelError",
    "MotifStats",
    "NoAdmissiblePrefixError",
    "NoMotifError",
    "ORACLE_VERTEX_LIMIT",
    "OracleResult",
    "OracleTooLargeError",
    "PeelState",
    "PeelStep",
    "PeelTrace",
    "UndefinedResultError",
    "VertexSet",
    "WeightedMotifGraph",
    "brute_force_optimum",
    "build_weighted_motif_graph",
    "certify_ratio",
    "colorful_star_degree",
    "colorful_wedge_degree",
    "count_cliques_within",
    "cut_and_vol",
    "degeneracy_order_of",
    "diagnostic_rows",
    "enumerate_cliques",
    "erdos_lower",
    "estimate_local_counts",
    "estimate_motif_degree",
    "f1_score",
    "generate",
    "greedy_color",
    "induced_neighbors",
    "ingest_edge_list",
    "local_counts",
    "metrics_report",
    "motif_conductance",
    "motif_degrees",
    "psmc",
    "psmc_plus",
    "read_communities",
    "retention_scores",
    "sweep_select",
    "trace_to_csv",
    "turan_clique_order",
    "turan_lower",
    "weighted_conductance",
    "write_edge_list",
    "write_ground_truth",
    "write_weighted_edge_list",
]
