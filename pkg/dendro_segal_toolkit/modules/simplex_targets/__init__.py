"""
Suite module for the dendro-segal toolkit: SimplexTargets

The simplex category Δ, finite linear orders with the cut duality
ℒ ≅ Δ^op, the cyclic category Λ with its self-duality, finite pointed sets
and finite nonempty sets, together with the functors between them.
"""

__description__ = "Δ, Λ, ℒ and finite sets"

from .delta import (
    DeltaMap,
    DeltaObj,
    compose_delta,
    count_delta,
    degeneracy,
    degeneracy_indices,
    enumerate_delta,
    epi_mono,
    face,
    face_indices,
    identity_delta,
)
from .linord import (
    LinOrd,
    LinOrdMap,
    compose_linord,
    cut_dual_map,
    cut_dual_obj,
    identity_linord,
    interval_dual_map,
)
from .cyclic import (
    CycMap,
    CycObj,
    compose_lambda,
    count_lambda,
    delta_to_lambda,
    enumerate_lambda,
    identity_lambda,
    lambda_dual,
    lambda_to_delta,
    reverse_orientation,
    rotation,
)
from .finite import (
    BASEPOINT,
    FinMap,
    PointedMap,
    compose_fin,
    compose_pointed,
    constant_pointed,
    delta_to_pointed,
    identity_fin,
    identity_pointed,
    lambda_to_fin,
    linord_to_pointed,
)
from .checks import SimplexTargetsModule

__all__ = [
    "DeltaMap",
    "DeltaObj",
    "compose_delta",
    "count_delta",
    "degeneracy",
    "degeneracy_indices",
    "enumerate_delta",
    "epi_mono",
    "face",
    "face_indices",
    "identity_delta",
    "LinOrd",
    "LinOrdMap",
    "compose_linord",
    "cut_dual_map",
    "cut_dual_obj",
    "identity_linord",
    "interval_dual_map",
    "CycMap",
    "CycObj",
    "compose_lambda",
    "count_lambda",
    "delta_to_lambda",
    "enumerate_lambda",
    "identity_lambda",
    "lambda_dual",
    "lambda_to_delta",
    "reverse_orientation",
    "rotation",
    "BASEPOINT",
    "FinMap",
    "PointedMap",
    "compose_fin",
    "compose_pointed",
    "constant_pointed",
    "delta_to_pointed",
    "identity_fin",
    "identity_pointed",
    "lambda_to_fin",
    "linord_to_pointed",
    "SimplexTargetsModule",
]
