"""Distance-balance analysis for finite simple graphs.

Core objects: `Graph` (immutable adjacency lists), sphere profiles, the
per-edge distance partition, and whole-graph classification as
distance-balanced (DB), nicely distance-balanced (NDB) and strongly
distance-balanced (SDB), all in O(mn) time via repeated BFS.

Also ships generators for the graph families exercised by the test
suite, Cartesian/lexicographic product and line-graph operators, a
brute-force oracle for differential testing, graph6/edge-list I/O, a
FastAPI classification service, and the `distbal` command line client.
"""

__version__ = "0.1.0"

from .graphs import (
    Graph,
    SphereProfile,
    GraphError,
    build_graph,
    bfs_distances,
    sphere_profile,
    diameter,
    is_bipartite,
    is_regular,
    is_connected,
)
from .balance import (
    EdgePartition,
    BalanceReport,
    w_sets,
    edge_partition,
    is_edge_balanced,
    is_edge_sdb,
    is_db,
    is_ndb,
    is_sdb,
    weighted_distance,
    conjecture_check,
    total_distance,
    full_report,
)

__all__ = [
    "Graph",
    "SphereProfile",
    "GraphError",
    "build_graph",
    "bfs_distances",
    "sphere_profile",
    "diameter",
    "is_bipartite",
    "is_regular",
    "is_connected",
    "EdgePartition",
    "BalanceReport",
    "w_sets",
    "edge_partition",
    "is_edge_balanced",
    "is_edge_sdb",
    "is_db",
    "is_ndb",
    "is_sdb",
    "weighted_distance",
    "conjecture_check",
    "total_distance",
    "full_report",
]
