"""
The left adjoint tree construction T ↦ T_f and the factorization through it.

For a plane tree T of arity m and f: [m] → [n] in Δ, T_f glues a corolla of
arity f(j) - f(j-1) onto leaf j and grafts T onto the special leaf of a root
corolla whose other leaves fill the areas before f(0) and after f(m). The
unit T → T_f is the inclusion. Every α: T → S over f factors uniquely as a
boundary-preserving map T_f → S after the unit.
"""

import logging
from typing import Dict, List, Optional, Tuple

from dendro_segal_toolkit.dst_core.exceptions import ArityMismatchError, FactorizationError
from dendro_segal_toolkit.modules.simplex_targets import (
    CycMap,
    DeltaMap,
    compose_lambda,
    rotation,
)
from dendro_segal_toolkit.modules.tree_hom import (
    CycTreeMorphism,
    RootableTreeMorphism,
    SymTreeMorphism,
    TreeMorphism,
    compose,
    forget_plane_morphism,
    hom,
    symmetrize_morphism,
)
from dendro_segal_toolkit.modules.trees import (
    ETA,
    ROOT,
    Arrow,
    CycTree,
    EdgeRef,
    RootableTree,
    SymTree,
    Tree,
    forget_root_with_map,
    make_corolla,
    replace_subtree,
    root_arrows,
    rooted_view,
)

from .boundary import is_boundary_preserving
from .functors import lcyc_map, lpl_map

logger = logging.getLogger(__name__)


def build_tf(tree: Tree, f: DeltaMap) -> Tuple[Tree, TreeMorphism]:
    """The tree T_f and the unit T → T_f."""
    if f.n_src != tree.arity:
        raise ArityMismatchError(f"{f} does not start at [{tree.arity}], the arity of {tree.encoding}")
    m, n = f.n_src, f.n_dst
    top = tree
    for j, leaf in enumerate(tree.leaves):
        top = replace_subtree(top, leaf, make_corolla(f(j + 1) - f(j)))
    tf = Tree((ETA,) * f(0) + (top,) + (ETA,) * (n - f(m)))
    prefix = EdgeRef((f(0),))
    unit = TreeMorphism(tree, tf, tuple(edge.lifted(prefix) for edge in tree.edges))
    logger.debug(f"T_f for {tree.encoding} along {f}: {tf.encoding}")
    return tf, unit


def factor_through_tf(alpha: TreeMorphism, f: Optional[DeltaMap] = None) -> TreeMorphism:
    """
    The boundary-preserving α^bp: T_f → S with α^bp ∘ unit = α.

    Raises:
        FactorizationError: if L_pl(α) differs from ``f`` or the constructed
            map fails its own certificate
    """
    source, target = alpha.source_tree, alpha.target_tree
    actual = lpl_map(alpha)
    f = actual if f is None else f
    if actual != f:
        raise FactorizationError(f"L_pl(α) = {actual}, not {f}")
    tf, unit = build_tf(source, f)
    m, n = f.n_src, f.n_dst
    prefix = EdgeRef((f(0),))
    leaves = target.leaves
    mapping: Dict[EdgeRef, EdgeRef] = {ROOT: ROOT}
    for k in range(f(0)):
        mapping[EdgeRef((k,))] = leaves[k]
    for k in range(n - f(m)):
        mapping[EdgeRef((f(0) + 1 + k,))] = leaves[f(m) + k]
    for edge in source.edges:
        mapping[edge.lifted(prefix)] = alpha(edge)
    for j, leaf in enumerate(source.leaves):
        glued = leaf.lifted(prefix)
        for k in range(f(j + 1) - f(j)):
            mapping[glued.child(k)] = leaves[f(j) + k]
    beta = TreeMorphism.from_mapping(tf, target, mapping)
    if not beta.is_valid() or not is_boundary_preserving(beta):
        raise FactorizationError(f"No boundary-preserving map {tf.encoding} → {target.encoding}")
    if compose(beta, unit) != alpha:
        raise FactorizationError("The factorization does not restrict to α along the unit")
    return beta


def bp_factorizations(alpha: TreeMorphism, f: Optional[DeltaMap] = None) -> List[TreeMorphism]:
    """Every boundary-preserving T_f → S through which α factors, by exhaustive search."""
    f = lpl_map(alpha) if f is None else f
    tf, unit = build_tf(alpha.source_tree, f)
    return [
        beta
        for beta in hom(tf, alpha.target_tree, root_image=ROOT)
        if is_boundary_preserving(beta) and compose(beta, unit) == alpha
    ]


def _rooting_for(phi: CycMap) -> int:
    """A source point s with φ(s) > φ(s - 1); one always exists for degree one maps."""
    return next(s for s in range(phi.m + 1) if phi(s) - phi(s - 1) >= 1)


def build_tf_cyclic(tree: CycTree, phi: CycMap) -> Tuple[CycTree, CycTreeMorphism, CycMap]:
    """
    T_f for a plane rootable tree and a map in Λ.

    The tree is rerooted so that area s becomes area 0, which turns φ into a
    map in Δ after shifting the target by φ(s). The plane construction is
    then read cyclically. Returns the canonical T_f, the unit and the
    rotation ρ with ρ ∘ L_cyc(unit) = φ.
    """
    plane = tree.tree
    if phi.m != plane.arity:
        raise ArityMismatchError(f"{phi} does not start at [{plane.arity}]")
    m, n = phi.m, phi.n
    s = _rooting_for(phi)
    rooted, view_map = rooted_view(plane, root_arrows(plane)[(s - 1) % (m + 1)])
    shifted = DeltaMap(m, n, tuple(phi(s + i) - phi(s) for i in range(m + 1)))
    plane_tf, plane_unit = build_tf(rooted, shifted)
    canonical, iso = forget_root_with_map(plane_tf)
    mapping: Dict[Arrow, Arrow] = {}
    for edge, arrow in view_map.items():
        image = plane_unit(edge)
        mapping[arrow] = iso[Arrow(image, False)]
        mapping[arrow.dual] = iso[Arrow(image, True)]
    unit = CycTreeMorphism.from_mapping(tree, canonical, mapping)
    image = lcyc_map(unit)
    for k in range(n + 1):
        identification = rotation(n, k)
        if compose_lambda(identification, image) == phi:
            return canonical, unit, identification
    raise FactorizationError(f"No rotation identifies L_cyc of the unit with {phi}")


def cyclic_factorizations(alpha: CycTreeMorphism) -> List[CycTreeMorphism]:
    """Boundary-preserving β: T_f → S over the identification with β ∘ unit = α."""
    phi = lcyc_map(alpha)
    tf, unit, identification = build_tf_cyclic(alpha.source, phi)
    return [
        beta
        for beta in hom(tf, alpha.target)
        if is_boundary_preserving(beta)
        and compose(beta, unit) == alpha
        and lcyc_map(beta) == identification
    ]


def factor_through_tf_cyclic(alpha: CycTreeMorphism) -> CycTreeMorphism:
    found = cyclic_factorizations(alpha)
    if len(found) != 1:
        raise FactorizationError(f"Expected one cyclic factorization, found {len(found)}")
    return found[0]


def build_tf_symmetric(tree: SymTree, f: DeltaMap) -> Tuple[SymTree, SymTreeMorphism]:
    """The plane construction on the representative, with the plane structure forgotten."""
    _, plane_unit = build_tf(tree.tree, f)
    unit = symmetrize_morphism(plane_unit)
    return unit.target, unit


def build_tf_rootable(tree: RootableTree, phi: CycMap) -> Tuple[RootableTree, RootableTreeMorphism]:
    """The cyclic construction on the representative, with the plane structure forgotten."""
    _, cyclic_unit, _ = build_tf_cyclic(CycTree(tree.tree), phi)
    unit = forget_plane_morphism(cyclic_unit)
    return unit.target, unit
