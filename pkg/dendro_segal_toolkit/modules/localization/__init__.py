"""
Suite module for the dendro-segal toolkit: Localization

The boundary functors L_pl: Ω_pl → Δ, L_sym: Ω_sym → Fin_*^op,
L_cyc: Ξ_pl → Λ and L_abs: Ξ → Fin_ne^op, boundary-preserving maps and
collapse maps, the weak fibers over [n] with their initial corollas, and the
left adjoint tree construction T ↦ T_f with its factorization.
"""

__description__ = "Boundary functors and their weak fibers"

from .functors import (
    as_cyclic,
    as_rootable,
    as_symmetric,
    external_fibres,
    functor_name,
    labs_map,
    labs_obj,
    lcyc_leaf_map,
    lcyc_map,
    lcyc_map_contravariant,
    lcyc_obj,
    left_area,
    localize,
    lpl_leaf_map,
    lpl_map,
    lpl_map_contravariant,
    lpl_obj,
    lsym_map,
    lsym_obj,
)
from .boundary import (
    OverObject,
    WeakFiberObject,
    collapse_map,
    collapse_maps,
    is_boundary_preserving,
    is_collapse,
    is_corolla,
)
from .adjoint import (
    bp_factorizations,
    build_tf,
    build_tf_cyclic,
    build_tf_rootable,
    build_tf_symmetric,
    cyclic_factorizations,
    factor_through_tf,
    factor_through_tf_cyclic,
)
from .initiality import corolla_like, identifications, initial_maps, weak_fiber_objects
from .checks import LocalizationModule

__all__ = [
    "as_cyclic",
    "as_rootable",
    "as_symmetric",
    "external_fibres",
    "functor_name",
    "labs_map",
    "labs_obj",
    "lcyc_leaf_map",
    "lcyc_map",
    "lcyc_map_contravariant",
    "lcyc_obj",
    "left_area",
    "localize",
    "lpl_leaf_map",
    "lpl_map",
    "lpl_map_contravariant",
    "lpl_obj",
    "lsym_map",
    "lsym_obj",
    "OverObject",
    "WeakFiberObject",
    "collapse_map",
    "collapse_maps",
    "is_boundary_preserving",
    "is_collapse",
    "is_corolla",
    "bp_factorizations",
    "build_tf",
    "build_tf_cyclic",
    "build_tf_rootable",
    "build_tf_symmetric",
    "cyclic_factorizations",
    "factor_through_tf",
    "factor_through_tf_cyclic",
    "corolla_like",
    "identifications",
    "initial_maps",
    "weak_fiber_objects",
    "LocalizationModule",
]
