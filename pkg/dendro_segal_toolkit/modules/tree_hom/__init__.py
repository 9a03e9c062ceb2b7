"""
Suite module for the dendro-segal toolkit: TreeHom

Trees as free operads. Operations are admissible cuts; morphisms are color
maps checked vertex by vertex, giving the categories Ω_pl, Ω_sym, Ξ_pl and
Ξ with hom enumeration, composition and the functors between them.
"""

__description__ = "Free operads on trees and their morphisms"

from .operations import (
    TreeOperation,
    match_operation,
    non_identity_count,
    operations_by_signature,
    operations_of,
)
from .morphisms import (
    CycTreeMorphism,
    RootableTreeMorphism,
    SymTreeMorphism,
    TreeMorphism,
    arrow_operation_exists,
    brute_force_hom,
    compose,
    forget_plane_morphism,
    forget_root_morphism,
    hom,
    identity,
    morphism_from_json,
    morphism_type,
    symmetrize_morphism,
    validate_morphism,
)
from .catalog import example_json, example_morphism, example_source, example_target
from .checks import TreeHomModule

__all__ = [
    "TreeOperation",
    "match_operation",
    "non_identity_count",
    "operations_by_signature",
    "operations_of",
    "CycTreeMorphism",
    "RootableTreeMorphism",
    "SymTreeMorphism",
    "TreeMorphism",
    "arrow_operation_exists",
    "brute_force_hom",
    "compose",
    "forget_plane_morphism",
    "forget_root_morphism",
    "hom",
    "identity",
    "morphism_from_json",
    "morphism_type",
    "symmetrize_morphism",
    "validate_morphism",
    "example_json",
    "example_morphism",
    "example_source",
    "example_target",
    "TreeHomModule",
]
