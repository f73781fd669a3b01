"""Cohort friendship-network analysis and group-assignment planning.

Builds a directed friendship network from survey nominations, detects
communities with divisive edge-betweenness removal and modularity
selection, ranks representatives by betweenness, classifies clusters by
mean mark, and plans assignment groups that keep high-performing clusters
intact while dispersing low-performing ones.
"""

from .centrality import (
    CentralityScores,
    Measure,
    Mode,
    betweenness,
    closeness,
    degree,
    eigenvector,
    rank_representatives,
)
from .community import (
    DivisionStep,
    DivisionTrace,
    ModularityCurve,
    Partition,
    best_partition,
    edge_betweenness,
    girvan_newman,
    modularity,
    partition_from_blocks,
)
from .config import RunConfig
from .demo import generate_demo_cohort
from .intervention import (
    AssignmentPlan,
    GroupProfile,
    InterventionPolicy,
    PlanGroup,
    Role,
    plan_intervention,
    predicted_group_profile,
)
from .model import (
    Cohort,
    FriendshipNetwork,
    Gender,
    Student,
    SymmetrizeRule,
    UndirectedView,
    build_network,
    make_cohort,
    pendant_vertices,
    reciprocity_rate,
    symmetrize,
    weak_components,
)
from .stats import (
    ClusterPerformance,
    DistributionSummary,
    GroupComparison,
    PerfClass,
    Shape,
    cluster_performance,
    compare_groups,
    skewness,
    summarize,
)

__version__ = "0.1.0"
