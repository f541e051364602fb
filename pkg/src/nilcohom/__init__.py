"""Exact Betti numbers of nilpotent Lie algebras and L^p measure-equivalence constants."""

from .cohomology import BettiProfile, betti_profile, ce_differential_matrix
from .lie import (
    GradedLieAlgebra,
    LieAlgebra,
    carnotification,
    catalog,
    center,
    central_product,
    direct_product,
    from_structure_constants,
    homogeneous_dimension,
    lower_central_series,
    nilpotency_class,
)
from .linalg import SparseRationalMatrix, Subspace, rank_exact
from .obstruction import (
    FillingDegrees,
    ObstructionReport,
    alpha,
    compare_groups,
    default_filling_degrees,
    growth_degree,
    lp_threshold,
    nk_constant,
)

__all__ = [
    "BettiProfile",
    "FillingDegrees",
    "GradedLieAlgebra",
    "LieAlgebra",
    "ObstructionReport",
    "SparseRationalMatrix",
    "Subspace",
    "alpha",
    "betti_profile",
    "carnotification",
    "catalog",
    "ce_differential_matrix",
    "center",
    "central_product",
    "compare_groups",
    "default_filling_degrees",
    "direct_product",
    "from_structure_constants",
    "growth_degree",
    "homogeneous_dimension",
    "lower_central_series",
    "lp_threshold",
    "nilpotency_class",
    "nk_constant",
    "rank_exact",
]
