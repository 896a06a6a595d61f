"""Long cycles and paths from density, and local search for two-path covers."""

from .longpaths import (
    bipartite_long_path,
    erdos_gallai_cycle,
    kst_edge_bound,
    long_path,
    mono_cycle_quarter,
)
from .twopaths import (
    PairSearch,
    PathPair,
    SearchResult,
    SearchTrace,
    c4free_single_path,
    c4free_two_paths,
    two_path_cover_kpp,
)

__all__ = [
    "bipartite_long_path", "erdos_gallai_cycle", "kst_edge_bound", "long_path", "mono_cycle_quarter",
    "PairSearch", "PathPair", "SearchResult", "SearchTrace",
    "c4free_single_path", "c4free_two_paths", "two_path_cover_kpp",
]
