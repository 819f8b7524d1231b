"""pstrd: exact solvers, bounds and hardness gadgets for p-strong Roman
domination in graphs."""

from .bounds import (
    BoundEntry,
    BoundsReport,
    bounds_report,
    lower_bound_order,
    lower_bound_zero_count,
    min_zero_count,
    sandwich_bounds,
    upper_bound_max_degree,
    upper_bound_order,
    upper_bound_probabilistic,
    upper_bound_regular,
)
from .families import (
    FamilyValue,
    SmallValue,
    classify_small_value,
    complete_bipartite_value,
    double_star_value,
    universal_vertex_value,
)
from .graphs import (
    FamilySpec,
    Graph,
    GraphFormatError,
    GraphMetrics,
    ceil_div,
    complete_bipartite_graph,
    cycle_graph,
    double_star_graph,
    edgeless_graph,
    fig3_spider_graph,
    generate,
    is_connected,
    join,
    metrics,
    parse_graph,
    path_graph,
    random_gnm_graph,
    robertson_graph,
    spec_from_string,
    star_graph,
    to_dimacs,
    to_edgelist,
)
from .heuristics import TrialStats, randomized_construction, tighten
from .labelings import (
    LabelFunction,
    Regime,
    ValidationReport,
    classify_regime,
    defense_threshold,
    format_labels,
    max_label,
    parse_labels,
    validate_labeling,
)
from .reduction import (
    EquivalenceReport,
    ReductionResult,
    X3CFormatError,
    X3CInstance,
    build_reduction,
    format_x3c,
    labeling_from_cover,
    parse_x3c,
    verify_reduction_equivalence,
    x3c_has_exact_cover,
)
from .solver import (
    CoverInstance,
    SolveResult,
    SolveStats,
    SolverConfig,
    cover_instance,
    domination_number,
    min_weight_cover,
    roman_domination_number,
    solve_exact,
    solve_naive,
)

__version__ = "0.1.0"
