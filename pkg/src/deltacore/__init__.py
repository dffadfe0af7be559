"""Delta-core subsampling of finite metric spaces by strong collapses."""

from .complexes import (
    Filtration,
    FlagGraph,
    Simplex,
    core_reduction_table,
    flag_core,
    simplex_count,
    vr_filtration,
)
from .diagram_distance import bottleneck_distance, compare_diagrams, wasserstein1_distance
from .homology import PersistenceDiagram, betti_numbers, persistent_homology, vr_persistence
from .metric_space import (
    Metric,
    NeighborGraph,
    PointCloud,
    delta_from_percentile,
    neighborhoods,
    pairwise_distance,
)
from .subsampling import CoreResult, delta_core, delta_equivalent, fps_subsample, is_dominated

__version__ = "0.1.0"
