"""Evaluation codes on projective toric varieties over finite fields.

The pipeline goes polytope -> variety -> code: describe a lattice
polytope by vertices and facet inequalities, check the simplicity and
characteristic hypotheses, then build the evaluation matrix of its
monomials at every rational point, compute the code dimension by a
per-face reduction count, and bound the minimum distance from below by
counting surviving reduced points of a surjective enlargement. The
oracle module re-derives the same quantities by brute force for
cross-checking at small sizes.
"""

from .intlat import SingularMatrixError, hnf_lower, snf_invariant_factors
from .polytope import Polytope, PolytopeError, offset_difference, same_normal_fan
from .gf import GF, FieldError, make_field, enumerate_units
from .variety import (
    Flag,
    HypothesisError,
    build_flags,
    check_hypotheses,
    count_rational_points,
    flag_assignment,
    flag_for_chain,
    picard_invariants,
    require_hypotheses,
    straighten,
    vertex_determinants,
)
from .code import (
    EvaluationMatrix,
    OrderSpec,
    ReductionSet,
    SurjectivityError,
    best_bound_over_orders,
    block_matrix,
    dimension,
    distance_lower_bound,
    distance_lower_bound_details,
    find_surjective_dilate,
    generator_matrix,
    is_surjective,
    ordered_lattice_points,
    projective_reduction,
    stock_orders,
    subcode_matrix,
    toric_generator_matrix,
    toric_reduction,
)
from .oracle import (
    BudgetExceededError,
    min_distance_exhaustive,
    min_weight_random_upper,
    pick_check,
    rank_gf,
    reduction_class_count_unionfind,
)

__all__ = [
    "BudgetExceededError",
    "EvaluationMatrix",
    "FieldError",
    "Flag",
    "GF",
    "HypothesisError",
    "OrderSpec",
    "Polytope",
    "PolytopeError",
    "ReductionSet",
    "SingularMatrixError",
    "SurjectivityError",
    "best_bound_over_orders",
    "block_matrix",
    "build_flags",
    "check_hypotheses",
    "count_rational_points",
    "dimension",
    "distance_lower_bound",
    "distance_lower_bound_details",
    "enumerate_units",
    "find_surjective_dilate",
    "flag_assignment",
    "flag_for_chain",
    "generator_matrix",
    "hnf_lower",
    "is_surjective",
    "make_field",
    "min_distance_exhaustive",
    "min_weight_random_upper",
    "offset_difference",
    "ordered_lattice_points",
    "pick_check",
    "picard_invariants",
    "projective_reduction",
    "rank_gf",
    "reduction_class_count_unionfind",
    "require_hypotheses",
    "same_normal_fan",
    "snf_invariant_factors",
    "stock_orders",
    "straighten",
    "subcode_matrix",
    "toric_generator_matrix",
    "toric_reduction",
    "vertex_determinants",
]

__version__ = "0.1.0"
