"""Distance-spectral sufficient conditions for graph factors, with exact oracles."""

from .graphs import (
    BlockLayout,
    Graph,
    Graph6Error,
    barrier_graph,
    complement,
    complete_graph,
    cycle_graph,
    delete,
    disjoint_union,
    empty_graph,
    extremal_graph,
    from_edge_list,
    from_graph6,
    graph_stats,
    is_connected,
    join,
    join_odd_cliques,
    path_graph,
    to_edge_list,
    to_graph6,
)
from .spectra import (
    DisconnectedGraphError,
    DistanceData,
    NonConvergenceError,
    SpectralResult,
    all_pairs_distances,
    distance_matrix,
    dq_matrix,
    full_spectrum,
    spectral_radius,
    transmission_report,
)
from .quotient import (
    NotEquitableError,
    QuotientMatrix,
    extremal_quotient_matrix,
    perron_ratio_report,
    quotient_matrix,
    quotient_perron,
    radius_threshold_report,
    verify_quotient_equality,
)
from .factors import (
    ComponentStats,
    FactorWitness,
    TooLargeError,
    component_stats,
    edge_threshold,
    fractional_ab_factor,
    fractional_pm_violator,
    half_integral_feasible,
    hall_check,
    has_k_factor,
    id_criterion_violator,
    is_fractional_ab_deleted,
    is_id_factor_critical,
    max_matching,
    tutte_violator,
)
from .certify import (
    ReplayReport,
    ScanReport,
    TheoremReport,
    barrier_comparison,
    certify_fractional_deleted,
    certify_fractional_factor,
    certify_id_factor_critical,
    certify_k_factor,
    odd_clique_merge_comparison,
    recognize_extremal,
    search_counterexamples,
)

__version__ = "0.1.0"
