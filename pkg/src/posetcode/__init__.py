"""Linear codes under coordinate-order weights: canonical generator
forms, maximal decompositions, packing-radius bounds and leveled
syndrome decoders, with brute-force oracles at desk scale."""

from .budget import DEFAULT_BUDGET, BudgetExceededError
from .decomp import (
    Decomposition,
    PDecomposition,
    PointedPartition,
    Profile,
    canonical_form,
    components_from_matrix,
    degree,
    is_p_canonical,
    is_partition_refinement,
    max_degree,
    maximal_p_decomposition,
    profile,
    validate_p_decomposition,
)
from .decode import (
    DecodePlan,
    PlanGroup,
    SyndromeTable,
    build_plan,
    build_plan_for_code,
    build_table,
    decode_full,
    decode_leveled_alg1,
    decode_leveled_alg2,
    hierarchical_groups,
    independent_groups,
    parity_check,
    project,
    table_sizes,
    unproject_support,
)
from .field import FieldElement, PrimeField
from .linear import (
    Code,
    Matrix,
    Vector,
    is_generalized_rref,
    min_distance,
    p_distance,
    p_weight,
    row_reduce_inverse,
    support,
)
from .poset import Poset, complete_cuts, leq_poset, lower_neighbor, upper_neighbor
from .radius import RadiusBounds, packing_radius_bounds, packing_radius_exact

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "Code",
    "DEFAULT_BUDGET",
    "DecodePlan",
    "Decomposition",
    "FieldElement",
    "Matrix",
    "PDecomposition",
    "PlanGroup",
    "PointedPartition",
    "Poset",
    "PrimeField",
    "Profile",
    "RadiusBounds",
    "SyndromeTable",
    "Vector",
    "build_plan",
    "build_plan_for_code",
    "build_table",
    "canonical_form",
    "complete_cuts",
    "components_from_matrix",
    "decode_full",
    "decode_leveled_alg1",
    "decode_leveled_alg2",
    "degree",
    "hierarchical_groups",
    "independent_groups",
    "is_generalized_rref",
    "is_p_canonical",
    "is_partition_refinement",
    "leq_poset",
    "lower_neighbor",
    "max_degree",
    "maximal_p_decomposition",
    "min_distance",
    "p_distance",
    "p_weight",
    "parity_check",
    "packing_radius_bounds",
    "packing_radius_exact",
    "profile",
    "project",
    "row_reduce_inverse",
    "support",
    "table_sizes",
    "unproject_support",
    "upper_neighbor",
    "validate_p_decomposition",
]
