"""
Custom exception classes for the dendro-segal toolkit.

Defines a hierarchy of exceptions for the error scenarios that can occur
while loading configuration, sequencing suite modules, and computing with
trees, target categories, presheaves and operads.
"""


class DSTError(Exception):
    """Base exception for all toolkit errors."""

    pass


class ConfigurationError(DSTError):
    """Configuration file errors."""

    pass


class SerializationError(DSTError):
    """Malformed JSON document for a tree, map, presheaf or operad."""

    pass


class DSTModuleError(DSTError):
    """Base exception for suite module errors."""

    pass


class ModuleNotFoundError(DSTModuleError):
    """Module discovery errors."""

    pass


class ModuleInitializationError(DSTModuleError):
    """Module initialization failures."""

    pass


class DependencyError(DSTModuleError):
    """Dependency resolution errors."""

    pass


class CircularDependencyError(DependencyError):
    """Circular dependency detection."""

    pass


class MissingDependencyError(DependencyError):
    """Missing required dependencies."""

    pass


class TreeError(DSTError):
    """Invalid tree construction or tree operation."""

    pass


class InvalidEdgeError(TreeError):
    """An EdgeRef that does not name an edge of the tree, or has the wrong role."""

    pass


class MorphismError(DSTError):
    """Errors raised by morphisms of trees and of the target categories."""

    pass


class CompositionMismatchError(MorphismError):
    """Source and target of composed morphisms do not agree."""

    pass


class InvalidMorphismError(MorphismError):
    """A map that fails the morphism conditions where a valid one is required."""

    pass


class ArityMismatchError(DSTError):
    """A tree and a map disagree on arity."""

    pass


class FactorizationError(DSTError):
    """No valid factorization through T_f was produced."""

    pass


class TruncationError(DSTError):
    """An index lies outside a truncation level or tree bound."""

    pass


class PresheafError(DSTError):
    """Inconsistent simplicial or dendroidal set data."""

    pass


class OperadError(DSTError):
    """Inconsistent operad tables."""

    pass


class ArityBoundError(OperadError):
    """An operation or composite exceeds the operad's arity bound."""

    pass


class EquivalenceError(DSTError):
    """The inputs of an equivalence construction violate its preconditions."""

    pass


# Error handling scenarios
ERROR_SCENARIOS = {
    "circular_dependency": "Suite modules have circular dependencies",
    "missing_dependency": "Required dependency module not found",
    "initialization_failure": "Module failed to initialize properly",
    "corrupted_config": "Configuration file is malformed or corrupted",
    "module_not_found": "Specified module does not exist",
    "malformed_document": "Input JSON document does not describe the expected value",
    "invalid_edge": "Edge reference does not name an edge of the tree",
    "composition_mismatch": "Morphisms are not composable",
    "arity_mismatch": "Tree arity does not match the source of the map",
    "truncation_exceeded": "Index lies outside the truncation or tree bounds",
    "not_two_segal": "Simplicial set does not satisfy the 2-Segal condition",
    "not_invertible": "Operad is not invertible",
}
