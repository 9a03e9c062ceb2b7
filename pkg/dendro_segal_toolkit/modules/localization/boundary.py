"""
Boundary-preserving maps, collapse maps and objects over [n].
"""

import logging
from dataclasses import dataclass
from typing import Any, List

from dendro_segal_toolkit.dst_core.exceptions import InvalidMorphismError
from dendro_segal_toolkit.modules.tree_hom import (
    CycTreeMorphism,
    TreeMorphism,
    forget_plane_morphism,
    forget_root_morphism,
    symmetrize_morphism,
)
from dendro_segal_toolkit.modules.trees import (
    ROOT,
    CycTree,
    RootableTree,
    SymTree,
    Tree,
    all_rerootings,
    arrow_source,
    leaf_arrows,
    make_corolla,
    plane_of,
)

logger = logging.getLogger(__name__)


def is_boundary_preserving(alpha) -> bool:
    """Root to root and leaves to leaves; for rootable trees, external arrows to external arrows."""
    source, target = alpha.source_tree, alpha.target_tree
    if isinstance(alpha, CycTreeMorphism):
        return all(arrow_source(target, alpha(a)) is None for a in leaf_arrows(source))
    if alpha(ROOT) != ROOT:
        return False
    return all(target.is_leaf(alpha(leaf)) for leaf in source.leaves)


def is_corolla(value) -> bool:
    tree = plane_of(value)
    return tree.num_vertices == 1 and tree.has_vertex(ROOT)


def is_collapse(alpha) -> bool:
    return is_corolla(alpha.source) and is_boundary_preserving(alpha)


def collapse_map(tree: Tree) -> TreeMorphism:
    """C_n → T onto the maximal operation (root; all leaves in planar order)."""
    corolla = make_corolla(tree.arity)
    return TreeMorphism(corolla, tree, (ROOT,) + tree.leaves)


def collapse_maps(value) -> List:
    """
    Collapse maps out of a corolla in any flavor. For rootable trees every
    rooting of the corolla is used.
    """
    tree = plane_of(value)
    if isinstance(value, Tree):
        return [collapse_map(tree)]
    if isinstance(value, SymTree):
        return [symmetrize_morphism(collapse_map(tree))]
    cyclic = [forget_root_morphism(collapse_map(rooting)) for rooting in all_rerootings(tree)]
    if isinstance(value, CycTree):
        return cyclic
    if isinstance(value, RootableTree):
        return [forget_plane_morphism(m) for m in cyclic]
    raise InvalidMorphismError(f"Not a tree: {value!r}")


@dataclass(frozen=True)
class OverObject:
    """A tree with a structure map L(tree) → [n] in the target category."""

    tree: Any
    structure_map: Any

    @property
    def n(self) -> int:
        target = getattr(self.structure_map, "n_dst", None)
        if target is None:
            target = getattr(self.structure_map, "n", None)
        if target is None:
            # maps of finite sets run backwards: [n] is the source
            target = self.structure_map.src - 1
        return target


@dataclass(frozen=True)
class WeakFiberObject(OverObject):
    """An object of the weak fiber: the structure map is an isomorphism."""

    def __post_init__(self):
        if not _is_iso(self.structure_map):
            raise InvalidMorphismError(f"{self.structure_map} is not an isomorphism")


def _is_iso(structure_map) -> bool:
    if hasattr(structure_map, "is_iso"):
        return structure_map.is_iso
    return structure_map.is_bijection

