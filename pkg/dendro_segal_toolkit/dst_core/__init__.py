"""
DST Core Module

Suite sequencing, configuration, exceptions and the command-line front end
of the dendro-segal toolkit.
"""

from .module_sequencer import DSTModule, ModuleResolution, ModuleSequencer, ModuleState
from .exceptions import (
    ArityBoundError,
    ArityMismatchError,
    CircularDependencyError,
    CompositionMismatchError,
    ConfigurationError,
    DependencyError,
    DSTError,
    DSTModuleError,
    EquivalenceError,
    FactorizationError,
    InvalidEdgeError,
    InvalidMorphismError,
    MissingDependencyError,
    ModuleInitializationError,
    ModuleNotFoundError,
    MorphismError,
    OperadError,
    PresheafError,
    SerializationError,
    TreeError,
    TruncationError,
)
from .verdict import CheckResult, Verdict

__version__ = "1.0.0"

__all__ = [
    "DSTModule",
    "ModuleResolution",
    "ModuleSequencer",
    "ModuleState",
    "ArityBoundError",
    "ArityMismatchError",
    "CircularDependencyError",
    "CompositionMismatchError",
    "ConfigurationError",
    "DependencyError",
    "DSTError",
    "DSTModuleError",
    "EquivalenceError",
    "FactorizationError",
    "InvalidEdgeError",
    "InvalidMorphismError",
    "MissingDependencyError",
    "ModuleInitializationError",
    "ModuleNotFoundError",
    "MorphismError",
    "OperadError",
    "PresheafError",
    "SerializationError",
    "TreeError",
    "TruncationError",
    "CheckResult",
    "Verdict",
]
