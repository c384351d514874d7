"""Fast approximate l-center clustering in high-dimensional Euclidean and
Hamming spaces via randomized sign-matrix dimension reduction."""

from .center_reduce import (
    ConservativeSubroutine,
    ReducedRunReport,
    dimred_center,
    euclid_min_diameter,
    euclid_two_plus_eps,
    external_subroutine,
    gonzalez_subroutine,
)
from .core import (
    CenterSolution,
    ClusteringSolution,
    Metric,
    OutlierSolution,
    PointSet,
    distance,
    evaluate_center_solution,
    evaluate_clustering,
)
from .gonzalez import assign_clusters, gonzalez
from .ham_center import dimred_ham_center, ham_min_diameter, two_plus_eps_ham
from .oracle import (
    BudgetExceededError,
    OracleBudget,
    opt_center_conservative,
    opt_center_outliers_conservative,
    opt_center_unconstrained_grid,
    opt_min_diameter,
)
from .outliers import (
    GreedyVerdict,
    RadiusCandidateSet,
    SurrogateKind,
    SurrogateMatrix,
    build_surrogate,
    dimred_cen_out,
    greedy_cover,
    three_plus_eps_out,
)
from .pointio import load_points, save_points
from .projection import (
    ProjectedSet,
    ProjectionMap,
    generate,
    project,
    projected_sq_distance,
    target_dimension,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CenterSolution",
    "ClusteringSolution",
    "ConservativeSubroutine",
    "GreedyVerdict",
    "Metric",
    "OracleBudget",
    "OutlierSolution",
    "PointSet",
    "ProjectedSet",
    "ProjectionMap",
    "RadiusCandidateSet",
    "ReducedRunReport",
    "SurrogateKind",
    "SurrogateMatrix",
    "assign_clusters",
    "build_surrogate",
    "dimred_cen_out",
    "dimred_center",
    "dimred_ham_center",
    "distance",
    "euclid_min_diameter",
    "euclid_two_plus_eps",
    "evaluate_center_solution",
    "evaluate_clustering",
    "external_subroutine",
    "generate",
    "gonzalez",
    "gonzalez_subroutine",
    "greedy_cover",
    "ham_min_diameter",
    "load_points",
    "opt_center_conservative",
    "opt_center_outliers_conservative",
    "opt_center_unconstrained_grid",
    "opt_min_diameter",
    "project",
    "projected_sq_distance",
    "save_points",
    "target_dimension",
    "three_plus_eps_out",
    "two_plus_eps_ham",
]
