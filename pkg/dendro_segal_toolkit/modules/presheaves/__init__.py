"""
Suite module for the dendro-segal toolkit: Presheaves

Finite small categories and their nerves, truncated simplicial sets with
the 1-Segal, 2-Segal and reduced Segal checkers, and dendroidal sets with
the dendroidal Segal, invertibility and covariant fibrancy checkers,
including restriction of a simplicial set along L_pl.
"""

__description__ = "Simplicial and dendroidal presheaves and their Segal conditions"

from .category import (
    SmallCategory,
    chain_category,
    cyclic_group,
    discrete_category,
    finite_monoid,
    poset_category,
    terminal_category,
    truncated_additive_monoid,
    validate_category,
)
from .simplicial import (
    TruncatedSimplicialSet,
    constant_point,
    constant_presheaf,
    corrupt_face,
    decode_label,
    duplicate_simplex,
    encode_label,
    nerve_of_category,
    validate_presheaf,
)
from .segal import (
    TwoSegalSquare,
    check_1segal,
    check_2segal,
    check_reduced_segal,
    pullback_defect,
    spine_defect,
    square_defect,
    two_segal_squares,
)
from .dendroidal import (
    DendroidalSet,
    RestrictedDendroidalSet,
    check_covariantly_fibrant,
    check_dendroidal_segal,
    check_invertible,
    check_square_correspondence,
    edge_inclusion,
    grafting_inclusions,
    grafting_square_indices,
    restrict_along_lpl,
    validate_dendroidal,
)
from .catalog import (
    MIN_DOUBLING_TRUNCATION,
    available_non_two_segal_fixtures,
    doubled_triangle,
    example_categories,
    non_two_segal_fixtures,
    two_segal_fixtures,
)
from .checks import PresheavesModule

__all__ = [
    "SmallCategory",
    "chain_category",
    "cyclic_group",
    "discrete_category",
    "finite_monoid",
    "poset_category",
    "terminal_category",
    "truncated_additive_monoid",
    "validate_category",
    "TruncatedSimplicialSet",
    "constant_point",
    "constant_presheaf",
    "corrupt_face",
    "decode_label",
    "duplicate_simplex",
    "encode_label",
    "nerve_of_category",
    "validate_presheaf",
    "TwoSegalSquare",
    "check_1segal",
    "check_2segal",
    "check_reduced_segal",
    "pullback_defect",
    "spine_defect",
    "square_defect",
    "two_segal_squares",
    "DendroidalSet",
    "RestrictedDendroidalSet",
    "check_covariantly_fibrant",
    "check_dendroidal_segal",
    "check_invertible",
    "check_square_correspondence",
    "edge_inclusion",
    "grafting_inclusions",
    "grafting_square_indices",
    "restrict_along_lpl",
    "validate_dendroidal",
    "MIN_DOUBLING_TRUNCATION",
    "available_non_two_segal_fixtures",
    "doubled_triangle",
    "example_categories",
    "non_two_segal_fixtures",
    "two_segal_fixtures",
    "PresheavesModule",
]
