"""
Symmetric, plane rootable and rootable trees.

Every variant is stored through a canonical plane representative, so all of
them share the EdgeRef naming of ``plane.Tree``:

- SymTree: children sorted by encoding at every vertex.
- CycTree: the minimal re-rooting over all external edges.
- RootableTree: the minimal symmetrized re-rooting.

For the rootable variants each edge carries two anti-parallel arrows. The
stored orientation of an arrow points toward the root of the representative
(``upward`` is False); the dual arrow points away from it. An arrow whose
source is a missing vertex comes "from infinity" and is a leaf of the
rootable tree; one whose target is missing goes "to infinity" and can serve
as a root.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Any, Dict, List, Mapping, Optional, Tuple

from dendro_segal_toolkit.dst_core.exceptions import SerializationError, TreeError

from .plane import ETA, ROOT, EdgeRef, Tree

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Arrow:
    """One of the two oriented halves of an edge."""

    edge: EdgeRef
    upward: bool = False

    @property
    def dual(self) -> "Arrow":
        return Arrow(self.edge, not self.upward)

    def __str__(self) -> str:
        return str(self.edge) + ("*" if self.upward else "")

    @classmethod
    def parse(cls, text: str) -> "Arrow":
        if text.endswith("*"):
            return cls(EdgeRef.parse(text[:-1]), True)
        return cls(EdgeRef.parse(text), False)


def arrows(tree: Tree) -> Tuple[Arrow, ...]:
    """Both arrows of every edge, edges in preorder, stored orientation first."""
    return tuple(a for e in tree.edges for a in (Arrow(e, False), Arrow(e, True)))


def arrow_source(tree: Tree, arrow: Arrow) -> Optional[EdgeRef]:
    """The vertex an arrow leaves (named by its output edge), or None."""
    if not arrow.upward:
        return arrow.edge if tree.has_vertex(arrow.edge) else None
    return arrow.edge.parent


def arrow_target(tree: Tree, arrow: Arrow) -> Optional[EdgeRef]:
    return arrow_source(tree, arrow.dual)


def outgoing_arrows(tree: Tree, vertex: EdgeRef) -> Tuple[Arrow, ...]:
    """Arrows leaving a vertex in clockwise order, starting with the downward one."""
    return (Arrow(vertex, False),) + tuple(Arrow(c, True) for c in tree.inputs(vertex))


def leaf_arrows(tree: Tree) -> Tuple[Arrow, ...]:
    """
    Arrows from infinity in clockwise order: the leaves of the stored
    rooting, then the upward arrow of the root edge.
    """
    return tuple(Arrow(leaf, False) for leaf in tree.leaves) + (Arrow(ROOT, True),)


def root_arrows(tree: Tree) -> Tuple[Arrow, ...]:
    """Arrows to infinity, aligned with ``leaf_arrows`` (the duals)."""
    return tuple(a.dual for a in leaf_arrows(tree))


@lru_cache(maxsize=None)
def rooted_view(tree: Tree, arrow: Arrow) -> Tuple[Tree, Mapping[EdgeRef, Arrow]]:
    """
    The plane rooted tree formed by the predecessors of ``arrow``.

    Returns the tree together with the map sending each of its edges to the
    arrow of ``tree`` it stands for; the root edge stands for ``arrow``.
    """

    def build(current: Arrow) -> Tuple[Tree, Dict[EdgeRef, Arrow]]:
        source = arrow_source(tree, current)
        if source is None:
            return ETA, {ROOT: current}
        around = outgoing_arrows(tree, source)
        position = around.index(current)
        children = []
        mapping = {ROOT: current}
        for offset in range(1, len(around)):
            predecessor = around[(position + offset) % len(around)].dual
            sub, sub_map = build(predecessor)
            children.append(sub)
            prefix = EdgeRef((offset - 1,))
            for path, image in sub_map.items():
                mapping[path.lifted(prefix)] = image
        return Tree(tuple(children)), mapping

    view, mapping = build(arrow)
    return view, MappingProxyType(mapping)


@lru_cache(maxsize=None)
def rooted_view_index(tree: Tree, arrow: Arrow) -> Mapping[Arrow, EdgeRef]:
    """Inverse of the edge map of ``rooted_view``."""
    _, mapping = rooted_view(tree, arrow)
    return MappingProxyType({image: edge for edge, image in mapping.items()})


def predecessors(tree: Tree, arrow: Arrow) -> Tuple[Arrow, ...]:
    return tuple(rooted_view(tree, arrow)[1].values())


def reroot(tree: Tree, edge: EdgeRef) -> Tree:
    """Re-root at an external edge, keeping the clockwise order."""
    if edge == ROOT:
        return tree
    if edge not in tree or not tree.is_leaf(edge):
        raise TreeError(f"'{edge}' is not an external edge of {tree.encoding}")
    return rooted_view(tree, Arrow(edge, True))[0]


def _sorted_with_map(tree: Tree) -> Tuple[Tree, Dict[EdgeRef, EdgeRef]]:
    if tree.is_eta:
        return tree, {ROOT: ROOT}
    parts = [_sorted_with_map(child) for child in tree.children]
    order = sorted(range(len(parts)), key=lambda i: parts[i][0].encoding)
    mapping = {ROOT: ROOT}
    for new_index, old_index in enumerate(order):
        for old, new in parts[old_index][1].items():
            mapping[old.lifted(EdgeRef((old_index,)))] = new.lifted(
                EdgeRef((new_index,))
            )
    return Tree(tuple(parts[i][0] for i in order)), mapping


@dataclass(frozen=True)
class SymTree:
    """A rooted tree without planar structure, by canonical representative."""

    tree: Tree

    kind = "sym"

    @property
    def arity(self) -> int:
        return self.tree.arity

    def to_json(self) -> Dict[str, Any]:
        return {"kind": self.kind, "tree": self.tree.to_json()}


@dataclass(frozen=True)
class CycTree:
    """A plane rootable tree, by its rotation-minimal plane representative."""

    tree: Tree

    kind = "cyc"

    @property
    def arity(self) -> int:
        """External edges minus one, matching the rooted arity of every rooting."""
        return self.tree.arity

    def to_json(self) -> Dict[str, Any]:
        return {"kind": self.kind, "tree": self.tree.to_json()}


@dataclass(frozen=True)
class RootableTree:
    """A rootable tree without planar structure, by canonical representative."""

    tree: Tree

    kind = "rootable"

    @property
    def arity(self) -> int:
        return self.tree.arity

    def to_json(self) -> Dict[str, Any]:
        return {"kind": self.kind, "tree": self.tree.to_json()}


def symmetrize_with_map(tree: Tree) -> Tuple[SymTree, Dict[EdgeRef, EdgeRef]]:
    """Canonical SymTree plus the edge bijection from ``tree`` to it."""
    canonical, mapping = _sorted_with_map(tree)
    return SymTree(canonical), mapping


def symmetrize(tree: Tree) -> SymTree:
    return symmetrize_with_map(tree)[0]


def forget_root_with_map(tree: Tree) -> Tuple[CycTree, Dict[Arrow, Arrow]]:
    """Canonical CycTree plus the arrow bijection from ``tree`` to it."""
    candidates = root_arrows(tree)
    if not candidates:
        raise TreeError("A rootable tree needs at least one external edge")
    best: Optional[Tuple[Tree, Mapping[EdgeRef, Arrow]]] = None
    for arrow in candidates:
        view = rooted_view(tree, arrow)
        if best is None or view[0].sort_key < best[0].sort_key:
            best = view
    canonical, mapping = best
    iso: Dict[Arrow, Arrow] = {}
    for edge, arrow in mapping.items():
        iso[arrow] = Arrow(edge, False)
        iso[arrow.dual] = Arrow(edge, True)
    return CycTree(canonical), iso


def forget_root(tree: Tree) -> CycTree:
    return forget_root_with_map(tree)[0]


def forget_plane_and_root_with_map(
    tree: Tree,
) -> Tuple[RootableTree, Dict[Arrow, Arrow]]:
    """Canonical RootableTree plus the arrow bijection from ``tree`` to it."""
    best = None
    for arrow in root_arrows(tree):
        view, view_map = rooted_view(tree, arrow)
        canonical, sort_map = _sorted_with_map(view)
        if best is None or canonical.sort_key < best[0].sort_key:
            best = (canonical, view_map, sort_map)
    canonical, view_map, sort_map = best
    iso: Dict[Arrow, Arrow] = {}
    for edge, arrow in view_map.items():
        iso[arrow] = Arrow(sort_map[edge], False)
        iso[arrow.dual] = Arrow(sort_map[edge], True)
    return RootableTree(canonical), iso


def forget_plane_and_root(tree: Tree) -> RootableTree:
    return forget_plane_and_root_with_map(tree)[0]


def forget_plane_with_map(cyc: CycTree) -> Tuple[RootableTree, Dict[Arrow, Arrow]]:
    """Ξ_pl → Ξ on objects, with the arrow bijection."""
    return forget_plane_and_root_with_map(cyc.tree)


def forget_plane(cyc: CycTree) -> RootableTree:
    return forget_plane_with_map(cyc)[0]


_VARIANTS = {"sym": symmetrize, "cyc": forget_root, "rootable": forget_plane_and_root}


def canonicalize(tree: Tree, kind: str):
    """Canonical variant of a plane tree; ``kind`` is sym, cyc or rootable."""
    try:
        return _VARIANTS[kind](tree)
    except KeyError:
        raise TreeError(f"Unknown tree kind '{kind}'") from None


def variant_from_json(data: Any):
    """Decode a tree document; a "kind" tag selects the variant."""
    if isinstance(data, dict) and "kind" in data:
        kind = data["kind"]
        if kind == "pl":
            return Tree.from_json(data.get("tree"))
        if kind not in _VARIANTS:
            raise SerializationError(f"Unknown tree kind '{kind}'")
        return canonicalize(Tree.from_json(data.get("tree")), kind)
    return Tree.from_json(data)


def variant_kind(value) -> str:
    return getattr(value, "kind", "pl")


def plane_of(value) -> Tree:
    """The plane representative of any tree variant."""
    return value if isinstance(value, Tree) else value.tree


def random_permutation_of_children(tree: Tree, rng) -> Tree:
    """Shuffle children at every vertex; used to exercise canonical forms."""
    if tree.is_eta:
        return tree
    kids = [random_permutation_of_children(child, rng) for child in tree.children]
    rng.shuffle(kids)
    return Tree(tuple(kids))


def all_rerootings(tree: Tree) -> List[Tree]:
    return [rooted_view(tree, arrow)[0] for arrow in root_arrows(tree)]
