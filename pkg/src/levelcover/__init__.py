"""levelcover: two-sided coverings (dominating sets) of the bipartite
level graphs of the n-cube, with exact solvers, constructions and
inequality verifiers."""

from .combinatorics import (
    Family,
    Subset,
    binomial,
    complement_pairs,
    enumerate_ksubsets,
    near_equal_partition,
    rank_colex,
    shadow2,
    turan_count,
    turan_graph,
    unrank_colex,
)
from .domination import (
    CheckResult,
    DominatingPair,
    Violation,
    check_domination,
    condition_counts,
)
from .constructions import (
    block_family,
    degree_bruteforce,
    degree_profile,
    g43_construct,
    g53_construct,
    gk1_construct,
    gk2_construct,
    greedy_cover,
    partition_edges,
)
from .exact import (
    SolveResult,
    TuranResult,
    count_cliques,
    count_independent,
    exact_gamma,
    exact_turan_ex,
    exhaustive_gamma,
)
from .bounds import (
    BoundReport,
    bound_report,
    component_shadow_bound,
    connected_shadow_bound,
    critical_family,
    general_upper_coeff,
    gk2_coeff,
    greedy_hitting,
    kside_counting_bound,
    overlap_components,
    overlap_graph,
    pairside_counting_bound,
    split_counting_bound,
    split_families,
    turan_cover_density,
    two_sided_lower_coeff,
)

__version__ = "0.1.0"
