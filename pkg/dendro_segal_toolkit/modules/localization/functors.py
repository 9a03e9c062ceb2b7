"""
The boundary functors L_pl, L_cyc, L_sym and L_abs.

Areas of a plane tree of arity n are numbered 0..n clockwise, area 0 right
after the root. External edges of a rootable tree carry the labels of
``leaf_arrows``: leaves 0..n-1, then the root edge as n. External edge k
lies between areas k and k + 1 (mod n + 1).

The functors work on whatever plane representatives the morphism carries;
they do not canonicalize. ``as_symmetric``, ``as_cyclic`` and
``as_rootable`` re-read a plane morphism in the other categories without
changing representatives, so the comparison squares can be checked exactly.
"""

import logging
from typing import Dict, List, Optional, Tuple

from dendro_segal_toolkit.dst_core.exceptions import InvalidMorphismError
from dendro_segal_toolkit.modules.simplex_targets import (
    CycMap,
    CycObj,
    DeltaMap,
    DeltaObj,
    FinMap,
    LinOrd,
    LinOrdMap,
    PointedMap,
    cut_dual_map,
    lambda_dual,
    reverse_orientation,
)
from dendro_segal_toolkit.modules.tree_hom import (
    CycTreeMorphism,
    RootableTreeMorphism,
    SymTreeMorphism,
    TreeMorphism,
)
from dendro_segal_toolkit.modules.trees import (
    ROOT,
    Arrow,
    CycTree,
    RootableTree,
    SymTree,
    Tree,
    leaf_arrows,
    plane_of,
    rooted_view,
    rooted_view_index,
)

logger = logging.getLogger(__name__)


def lpl_obj(tree: Tree) -> DeltaObj:
    return DeltaObj(tree.arity)


def lpl_map(alpha: TreeMorphism) -> DeltaMap:
    """
    Covariant description: area 0 goes to the area left of the image of the
    root, area i to the area right of the image of leaf i - 1.
    """
    source, target = alpha.source_tree, alpha.target_tree
    intervals = target.leaf_intervals
    values = [intervals[alpha(ROOT)][0]]
    values.extend(intervals[alpha(leaf)][1] for leaf in source.leaves)
    return DeltaMap(source.arity, target.arity, tuple(values))


def lpl_leaf_map(alpha: TreeMorphism) -> LinOrdMap:
    """
    Leaves of the target → leaves of the source as a tri-partition: leaves
    left of the image of the root, leaves above the image of a leaf, leaves
    right of the image of the root.
    """
    source, target = alpha.source_tree, alpha.target_tree
    left, right = target.leaf_intervals[alpha(ROOT)]
    owner: Dict[int, int] = {}
    for i, leaf in enumerate(source.leaves):
        lo, hi = target.leaf_intervals[alpha(leaf)]
        for p in range(lo, hi):
            owner[p] = i
    if sorted(owner) != list(range(left, right)):
        raise InvalidMorphismError("Leaf images do not form a cut above the image of the root")
    values = tuple(owner[p] for p in range(left, right))
    return LinOrdMap(
        LinOrd(tuple(str(leaf) for leaf in target.leaves)),
        LinOrd(tuple(str(leaf) for leaf in source.leaves)),
        left,
        target.arity - right,
        values,
    )


def lpl_map_contravariant(alpha: TreeMorphism) -> DeltaMap:
    """Contravariant description: the cut dual of the leaf tri-partition."""
    return cut_dual_map(lpl_leaf_map(alpha))


def lcyc_obj(value) -> CycObj:
    return CycObj(plane_of(value).arity)


def left_area(tree: Tree, arrow: Arrow) -> int:
    """The area just clockwise of ``arrow`` when it is read as an output."""
    left, right = tree.leaf_intervals[arrow.edge]
    return right if arrow.upward else left


def lcyc_map(alpha: CycTreeMorphism) -> CycMap:
    """
    Covariant description: restrict to the plane tree of predecessors of the
    image of the root arrow, apply L_pl and shift by the area next to that
    image.
    """
    source, target = alpha.source_tree, alpha.target_tree
    output = alpha(Arrow(ROOT, False))
    view, _ = rooted_view(target, output)
    index = rooted_view_index(target, output)
    try:
        images = tuple(index[alpha(Arrow(edge, False))] for edge in source.edges)
    except KeyError:
        raise InvalidMorphismError("The map does not preserve predecessors of the root") from None
    plane = lpl_map(TreeMorphism(source, view, images))
    offset = left_area(target, output)
    return CycMap.normalized(source.arity, target.arity, [offset + v for v in plane.values])


def external_fibres(alpha) -> Tuple[List[int], Dict[int, int]]:
    """
    For every external edge of the target, the external edge of the source
    whose image it lies behind; also the first label of every nonempty fibre
    in clockwise order.
    """
    source, target = alpha.source_tree, alpha.target_tree
    labels = {arrow: j for j, arrow in enumerate(leaf_arrows(target))}
    owner: List[Optional[int]] = [None] * len(labels)
    starts: Dict[int, int] = {}
    for i, arrow in enumerate(leaf_arrows(source)):
        view, view_map = rooted_view(target, alpha(arrow))
        fibre = [labels[view_map[leaf]] for leaf in view.leaves]
        for j in fibre:
            if owner[j] is not None:
                raise InvalidMorphismError("External edges of the target are covered twice")
            owner[j] = i
        if fibre:
            starts[i] = fibre[0]
    if any(i is None for i in owner):
        raise InvalidMorphismError("Some external edge of the target is not covered")
    return owner, starts


def lcyc_leaf_map(alpha: CycTreeMorphism) -> CycMap:
    """
    Contravariant description: the external-edge map [n] → [m], lifted to a
    degree-one map. A fibre covering the whole circle wraps once at its start.
    """
    m, n = alpha.source_tree.arity, alpha.target_tree.arity
    owner, starts = external_fibres(alpha)
    lift = [owner[0]]
    for j in range(1, n + 1):
        step = (owner[j] - owner[j - 1]) % (m + 1)
        if step == 0 and starts.get(owner[j]) == j:
            step = m + 1
        lift.append(lift[-1] + step)
    return CycMap.normalized(n, m, lift)


def lcyc_map_contravariant(alpha: CycTreeMorphism) -> CycMap:
    return lambda_dual(reverse_orientation(lcyc_leaf_map(alpha)))


def lsym_obj(value) -> int:
    """Size of the pointed set of external edges, basepoint at the root."""
    return plane_of(value).arity + 1


def lsym_map(alpha: TreeMorphism) -> PointedMap:
    """
    Leaf e of the target goes to the leaf d of the source with α(d) <= e, or
    to the basepoint if there is none.
    """
    source, target = alpha.source_tree, alpha.target_tree
    values = [0] * (target.arity + 1)
    for p, leaf in enumerate(target.leaves):
        for i, candidate in enumerate(source.leaves):
            if alpha(candidate).is_prefix_of(leaf):
                values[p + 1] = i + 1
                break
    return PointedMap(target.arity + 1, source.arity + 1, tuple(values))


def labs_obj(value) -> int:
    return plane_of(value).arity + 1


def labs_map(alpha: CycTreeMorphism) -> FinMap:
    m, n = alpha.source_tree.arity, alpha.target_tree.arity
    owner, _ = external_fibres(alpha)
    return FinMap(n + 1, m + 1, tuple(owner))


def as_symmetric(alpha: TreeMorphism) -> SymTreeMorphism:
    return SymTreeMorphism(SymTree(alpha.source_tree), SymTree(alpha.target_tree), alpha.images)


def as_cyclic(alpha: TreeMorphism) -> CycTreeMorphism:
    """The same map on arrows; orientations toward the root are preserved."""
    images = []
    for edge in alpha.source_tree.edges:
        image = alpha(edge)
        images.extend((Arrow(image, False), Arrow(image, True)))
    return CycTreeMorphism(CycTree(alpha.source_tree), CycTree(alpha.target_tree), tuple(images))


def as_rootable(alpha: CycTreeMorphism) -> RootableTreeMorphism:
    return RootableTreeMorphism(
        RootableTree(alpha.source_tree), RootableTree(alpha.target_tree), alpha.images
    )


_FUNCTORS = {
    TreeMorphism: ("pl", lpl_map),
    SymTreeMorphism: ("sym", lsym_map),
    CycTreeMorphism: ("cyc", lcyc_map),
    RootableTreeMorphism: ("abs", labs_map),
}


def localize(alpha):
    """Validate a tree morphism of any flavor and apply its boundary functor."""
    try:
        _, functor = _FUNCTORS[type(alpha)]
    except KeyError:
        raise InvalidMorphismError(f"Not a tree morphism: {alpha!r}") from None
    if not alpha.is_valid():
        raise InvalidMorphismError("The edge map is not a morphism of free operads")
    return functor(alpha)


def functor_name(alpha) -> str:
    return _FUNCTORS[type(alpha)][0]
