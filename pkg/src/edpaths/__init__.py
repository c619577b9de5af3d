"""Two edge-disjoint paths under per-path length constraints.

Random-partition FPT solvers with a derandomized mode, an exhaustive oracle,
and the OR-composition / ppt gadgets as instance transformers.
"""
from .constraints import (
    UNBOUNDED,
    Case,
    CaseId,
    Kind,
    LengthConstraint,
    ProblemInstance,
    Solution,
    at_least,
    at_most,
    classify_case,
    exactly,
    format_instance,
    format_solution,
    parse_instance,
    parse_solution,
    verify_solution,
)
from .derand import (
    LimitsExceeded,
    UniversalFamily,
    UniversalLimits,
    build_universal_family,
    derandomized_solve,
    verify_universal,
)
from .gadgets import (
    CompositionReport,
    PathInstance,
    identify_compose,
    make_no_instance,
    or_compose_many,
    or_compose_pair,
    ppt_from_exact_path,
)
from .generate import PlantShape, gen_planted, gen_random
from .graph import (
    UNREACHABLE,
    DistanceMap,
    Graph,
    GraphFormatError,
    InvalidPath,
    Path,
    bfs_distances,
    parse_graph,
    remove_edges,
    serialize_graph,
    shortest_path,
)
from .oracle import InstanceTooLargeForOracle, enumerate_paths, minimal_valid_partner, oracle_solve
from .partition import (
    ColorAssignment,
    NearbySets,
    SolveConfig,
    TrialPlan,
    Unsupported,
    compute_nearby,
    random_edge_partition,
    solve,
    solve_constrained_long,
    solve_constrained_unbounded,
    solve_short_short,
    trial_count,
)
from .paths import (
    GraphTooLargeForExactLongPath,
    LongPathBudget,
    any_path,
    find_path_at_least,
    find_path_at_most,
    find_path_exact,
)

__version__ = "0.1.0"
