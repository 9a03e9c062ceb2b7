"""
Suite module for the dendro-segal toolkit: Operads

Finite colored non-symmetric operads given by tables up to an arity bound:
validation, the invertibility predicate, morphisms and isomorphism search,
and the dendroidal nerve with the three equivalent invertibility criteria.
"""

__description__ = "Finite operads, invertibility and the dendroidal nerve"

from .operad import (
    FiniteOperad,
    Signature,
    composable_instances,
    composite_signature,
    corrupt_composition,
    inner_tuples,
    operad_of_category,
    operad_of_chains,
    relabel,
    terminal_operad,
    validate_operad,
)
from .morphisms import OperadMorphism, find_operad_isomorphism
from .nerve import (
    InvertibilityCriteria,
    OperadNerve,
    characterize_invertible,
    check_bp_inverted,
    corolla_composite_tree,
    dendroidal_nerve,
    invertibility_through_trees,
    is_invertible_operad,
    linear_levels,
)
from .catalog import (
    invertible_operads,
    non_invertible_operads,
    operad_fixtures,
    random_invertible_operad,
    random_poset,
)
from .checks import OperadsModule

__all__ = [
    "FiniteOperad",
    "Signature",
    "composable_instances",
    "composite_signature",
    "corrupt_composition",
    "inner_tuples",
    "operad_of_category",
    "operad_of_chains",
    "relabel",
    "terminal_operad",
    "validate_operad",
    "OperadMorphism",
    "find_operad_isomorphism",
    "InvertibilityCriteria",
    "OperadNerve",
    "characterize_invertible",
    "check_bp_inverted",
    "corolla_composite_tree",
    "dendroidal_nerve",
    "invertibility_through_trees",
    "is_invertible_operad",
    "linear_levels",
    "invertible_operads",
    "non_invertible_operads",
    "operad_fixtures",
    "random_invertible_operad",
    "random_poset",
    "OperadsModule",
]
