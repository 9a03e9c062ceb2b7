"""
Suite module for the dendro-segal toolkit: Trees

Plane rooted trees and their symmetric, plane rootable and rootable
variants: construction, JSON and string codecs, grafting, bounded
enumeration and canonical forms.
"""

__description__ = "Plane, symmetric and rootable trees"

from .plane import (
    ETA,
    ROOT,
    EdgeRef,
    Tree,
    count_trees,
    decode,
    enumerate_trees,
    graft,
    grafting_decompositions,
    make_corolla,
    make_eta,
    make_linear,
    prune,
    replace_subtree,
)
from .rootable import (
    Arrow,
    CycTree,
    RootableTree,
    SymTree,
    all_rerootings,
    arrow_source,
    arrow_target,
    arrows,
    canonicalize,
    forget_plane,
    forget_plane_and_root,
    forget_plane_and_root_with_map,
    forget_plane_with_map,
    forget_root,
    forget_root_with_map,
    leaf_arrows,
    outgoing_arrows,
    plane_of,
    predecessors,
    random_permutation_of_children,
    reroot,
    root_arrows,
    rooted_view,
    rooted_view_index,
    symmetrize,
    symmetrize_with_map,
    variant_from_json,
    variant_kind,
)
from .checks import TreesModule

__all__ = [
    "ETA",
    "ROOT",
    "EdgeRef",
    "Tree",
    "count_trees",
    "decode",
    "enumerate_trees",
    "graft",
    "grafting_decompositions",
    "make_corolla",
    "make_eta",
    "make_linear",
    "prune",
    "replace_subtree",
    "Arrow",
    "CycTree",
    "RootableTree",
    "SymTree",
    "all_rerootings",
    "arrow_source",
    "arrow_target",
    "arrows",
    "canonicalize",
    "forget_plane",
    "forget_plane_and_root",
    "forget_plane_and_root_with_map",
    "forget_plane_with_map",
    "forget_root",
    "forget_root_with_map",
    "leaf_arrows",
    "outgoing_arrows",
    "plane_of",
    "predecessors",
    "random_permutation_of_children",
    "reroot",
    "root_arrows",
    "rooted_view",
    "rooted_view_index",
    "symmetrize",
    "symmetrize_with_map",
    "variant_from_json",
    "variant_kind",
    "TreesModule",
]
