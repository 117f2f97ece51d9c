"""Exact counts, uniform samplers, and limit laws for LIS lengths in
pattern-avoiding permutations.

The six length-3 patterns each carve out a Catalan-sized class of S_n; this
package computes the exact distribution of the longest-increasing-subsequence
length over each class, samples the classes exactly uniformly, and evaluates
the three limiting laws (normal, theta / tree height, incomplete gamma) that
the normalized statistic converges to.
"""

from .counting import (
    DistTable,
    binomial,
    catalan,
    count_lis,
    count_lis_231,
    count_lis_321,
    cum_count_lis_132,
    cum_count_lis_321,
    dist_table,
    exact_moments,
    two_row_tableau_count,
)
from .bijections import (
    Tableau,
    TableauPair,
    dyck_height,
    dyck_to_perm132,
    dyck_to_tree,
    is_dyck_path,
    is_standard,
    iter_dyck_paths,
    perm132_to_dyck,
    rsk_insert,
    rsk_inverse,
    tree_edge_count,
    tree_height,
    tree_to_dyck,
    tree_to_parens,
)
from .convergence import (
    GAMMA_321,
    LAWS,
    NORMAL_231,
    THETA_132,
    ConvergenceReport,
    ConvergenceRow,
    LimitLaw,
    NormalizedCdf,
    convergence_report,
    ks_distance,
    law_for_pattern,
    normalized_cdf,
)
from .errors import (
    BoundExceededError,
    LawMismatchError,
    MalformedPathError,
    PatternContainedError,
    TableauError,
)
from .limits import (
    chi2_3_cdf,
    gamma321_cdf,
    jacobi_theta,
    jacobi_theta_deriv,
    normal_cdf,
    regularized_lower_gamma,
    theta_cdf,
    theta_cdf_via_jacobi,
    theta_law_stdev,
    theta_series_term,
)
from .oracle import enumerate_class, histogram_lis
from .permutations import (
    PATTERNS,
    Perm,
    avoids,
    complement,
    contains_pattern,
    erdos_szekeres_check,
    identity,
    is_permutation,
    iter_permutations,
    lds_length,
    lis_length,
    pattern_perm,
    reverse,
)
from .sampling import SamplerState, sample_avoider, sample_dyck_uniform
from .verification import CheckResult, run_verification

__version__ = "0.1.0"

__all__ = [
    "BoundExceededError",
    "CheckResult",
    "ConvergenceReport",
    "ConvergenceRow",
    "DistTable",
    "GAMMA_321",
    "LAWS",
    "LawMismatchError",
    "LimitLaw",
    "MalformedPathError",
    "NORMAL_231",
    "NormalizedCdf",
    "PATTERNS",
    "PatternContainedError",
    "Perm",
    "SamplerState",
    "THETA_132",
    "Tableau",
    "TableauError",
    "TableauPair",
    "avoids",
    "binomial",
    "catalan",
    "chi2_3_cdf",
    "complement",
    "contains_pattern",
    "convergence_report",
    "count_lis",
    "count_lis_231",
    "count_lis_321",
    "cum_count_lis_132",
    "cum_count_lis_321",
    "dist_table",
    "dyck_height",
    "dyck_to_perm132",
    "dyck_to_tree",
    "enumerate_class",
    "erdos_szekeres_check",
    "exact_moments",
    "gamma321_cdf",
    "histogram_lis",
    "identity",
    "is_dyck_path",
    "is_permutation",
    "is_standard",
    "iter_dyck_paths",
    "iter_permutations",
    "jacobi_theta",
    "jacobi_theta_deriv",
    "ks_distance",
    "law_for_pattern",
    "lds_length",
    "lis_length",
    "normal_cdf",
    "normalized_cdf",
    "pattern_perm",
    "perm132_to_dyck",
    "regularized_lower_gamma",
    "reverse",
    "rsk_insert",
    "rsk_inverse",
    "run_verification",
    "sample_avoider",
    "sample_dyck_uniform",
    "theta_cdf",
    "theta_cdf_via_jacobi",
    "theta_law_stdev",
    "theta_series_term",
    "tree_edge_count",
    "tree_height",
    "tree_to_dyck",
    "tree_to_parens",
    "two_row_tableau_count",
]
