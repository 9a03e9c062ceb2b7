"""
Morphisms between trees as maps of the free operads they generate.

Plane and symmetric morphisms are edge maps; cyclic and rootable morphisms
are arrow maps. Only the map on colors is stored. Operations on vertices
are recovered by ``match_operation`` because they are determined by their
input and output colors.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from dendro_segal_toolkit.dst_core.exceptions import (
    CompositionMismatchError,
    InvalidMorphismError,
    SerializationError,
)
from dendro_segal_toolkit.modules.trees import (
    ROOT,
    Arrow,
    CycTree,
    EdgeRef,
    RootableTree,
    SymTree,
    Tree,
    arrows,
    forget_plane_with_map,
    forget_root_with_map,
    outgoing_arrows,
    plane_of,
    rooted_view,
    rooted_view_index,
    symmetrize_with_map,
    variant_from_json,
)

from .operations import match_operation, operations_by_signature

logger = logging.getLogger(__name__)

TreeLike = Union[Tree, SymTree, CycTree, RootableTree]


@dataclass(frozen=True)
class _ColorMap:
    """Shared storage: images aligned with the source's colors."""

    source: Any
    target: Any
    images: Tuple[Any, ...]

    kind = "pl"
    ordered = True

    @classmethod
    def colors_of(cls, tree: Tree) -> Tuple[Any, ...]:
        return tree.edges

    @property
    def source_tree(self) -> Tree:
        return plane_of(self.source)

    @property
    def target_tree(self) -> Tree:
        return plane_of(self.target)

    @property
    def colors(self) -> Tuple[Any, ...]:
        return self.colors_of(self.source_tree)

    def __call__(self, color):
        return self.images[self._position(color)]

    def _position(self, color) -> int:
        try:
            return _color_positions(type(self), self.source_tree)[color]
        except KeyError:
            raise InvalidMorphismError(f"'{color}' is not a color of the source") from None

    @property
    def mapping(self) -> Dict[Any, Any]:
        return dict(zip(self.colors, self.images))

    @classmethod
    def from_mapping(cls, source, target, mapping: Mapping[Any, Any]):
        colors = cls.colors_of(plane_of(source))
        missing = [c for c in colors if c not in mapping]
        if missing:
            raise InvalidMorphismError(f"Map is not defined on {', '.join(map(str, missing))}")
        return cls(source, target, tuple(mapping[c] for c in colors))

    def is_valid(self) -> bool:
        if len(self.images) != len(self.colors):
            return False
        target_colors = set(self.colors_of(self.target_tree))
        if any(image not in target_colors for image in self.images):
            return False
        return self._vertex_conditions_hold()

    def _vertex_conditions_hold(self) -> bool:
        raise NotImplementedError

    def _serialize(self, color) -> str:
        return str(color)

    def to_json(self) -> Dict[str, Any]:
        data = {
            "source": _tree_json(self.source),
            "target": _tree_json(self.target),
            "edges": {self._serialize(c): self._serialize(i) for c, i in zip(self.colors, self.images)},
        }
        if self.kind != "pl":
            data["kind"] = self.kind
        return data


@lru_cache(maxsize=None)
def _color_positions(cls, tree: Tree) -> Dict[Any, int]:
    return {color: i for i, color in enumerate(cls.colors_of(tree))}


def _tree_json(value) -> Any:
    return plane_of(value).to_json()


class TreeMorphism(_ColorMap):
    """A morphism of Ω_pl."""

    def _vertex_conditions_hold(self) -> bool:
        source, target = self.source_tree, self.target_tree
        for vertex in source.vertices:
            inputs = [self(edge) for edge in source.inputs(vertex)]
            if match_operation(target, self(vertex), inputs, ordered=self.ordered) is None:
                return False
        return True


class SymTreeMorphism(TreeMorphism):
    """A morphism of Ω_sym: vertex inputs may land in any order."""

    kind = "sym"
    ordered = False


class CycTreeMorphism(_ColorMap):
    """A morphism of Ξ_pl, stored on arrows."""

    kind = "cyc"

    @classmethod
    def colors_of(cls, tree: Tree) -> Tuple[Any, ...]:
        return arrows(tree)

    def _vertex_conditions_hold(self) -> bool:
        source, target = self.source_tree, self.target_tree
        for arrow in self.colors:
            if self(arrow.dual) != self(arrow).dual:
                return False
        for vertex in source.vertices:
            around = outgoing_arrows(source, vertex)
            for position, output in enumerate(around):
                inputs = [
                    around[(position + offset) % len(around)].dual
                    for offset in range(1, len(around))
                ]
                if not arrow_operation_exists(
                    target, self(output), [self(a) for a in inputs], self.ordered
                ):
                    return False
        return True


class RootableTreeMorphism(CycTreeMorphism):
    """A morphism of Ξ."""

    kind = "rootable"
    ordered = False


def arrow_operation_exists(
    tree: Tree, output: Arrow, inputs: Sequence[Arrow], ordered: bool = True
) -> bool:
    """Is (inputs; output) an operation of the cyclic operad on ``tree``?"""
    view, _ = rooted_view(tree, output)
    index = rooted_view_index(tree, output)
    try:
        translated = [index[a] for a in inputs]
    except KeyError:
        return False
    return match_operation(view, ROOT, translated, ordered=ordered) is not None


_MORPHISM_TYPES = {
    Tree: TreeMorphism,
    SymTree: SymTreeMorphism,
    CycTree: CycTreeMorphism,
    RootableTree: RootableTreeMorphism,
}


def morphism_type(value: TreeLike):
    try:
        return _MORPHISM_TYPES[type(value)]
    except KeyError:
        raise InvalidMorphismError(f"Not a tree: {value!r}") from None


def validate_morphism(morphism) -> bool:
    """True iff the color map satisfies every vertex condition."""
    return morphism.is_valid()


def identity(tree: TreeLike):
    cls = morphism_type(tree)
    colors = cls.colors_of(plane_of(tree))
    return cls(tree, tree, tuple(colors))


def compose(g, f):
    """``g ∘ f``: apply ``f`` first."""
    if type(g) is not type(f):
        raise CompositionMismatchError(f"Cannot compose {g.kind} with {f.kind} morphism")
    if f.target != g.source:
        raise CompositionMismatchError("Target of the first map is not the source of the second")
    return type(f)(f.source, g.target, tuple(g(image) for image in f.images))


def _edge_maps(
    source: Tree, target: Tree, ordered: bool, root_image: Optional[EdgeRef] = None
) -> Iterator[Tuple[EdgeRef, ...]]:
    """Backtracking over operation choices, vertices in preorder."""
    position = source.edge_index
    vertices = source.vertices
    by_signature = operations_by_signature(target)
    images: List[Optional[EdgeRef]] = [None] * len(source.edges)

    def assign(k: int) -> Iterator[Tuple[EdgeRef, ...]]:
        if k == len(vertices):
            yield tuple(images)
            return
        vertex = vertices[k]
        kids = source.inputs(vertex)
        for op in by_signature.get((images[position[vertex]], len(kids)), ()):
            arrangements = [op.inputs] if ordered else itertools.permutations(op.inputs)
            for arrangement in arrangements:
                for kid, image in zip(kids, arrangement):
                    images[position[kid]] = image
                yield from assign(k + 1)

    roots = [root_image] if root_image is not None else list(target.edges)
    for root in roots:
        images[0] = root
        yield from assign(0)


def hom(source: TreeLike, target: TreeLike, root_image: Optional[EdgeRef] = None) -> List:
    """
    All morphisms ``source → target`` in deterministic order.

    Both arguments must be of the same kind. ``root_image`` restricts plane
    and symmetric maps to those sending the root edge there.
    """
    if type(source) is not type(target):
        raise CompositionMismatchError("hom needs two trees of the same kind")
    cls = morphism_type(source)
    if cls in (TreeMorphism, SymTreeMorphism):
        return [
            cls(source, target, images)
            for images in _edge_maps(
                plane_of(source), plane_of(target), cls.ordered, root_image
            )
        ]
    return _hom_arrows(source, target, cls)


def _hom_arrows(source, target, cls) -> List:
    """Cyclic and rootable hom-sets through the rooted views of the target."""
    source_tree, target_tree = plane_of(source), plane_of(target)
    found = []
    seen = set()
    for arrow in arrows(target_tree):
        view, view_map = rooted_view(target_tree, arrow)
        for images in _edge_maps(source_tree, view, cls.ordered, root_image=ROOT):
            arrow_map = {}
            for edge, image in zip(source_tree.edges, images):
                lifted = view_map[image]
                arrow_map[Arrow(edge, False)] = lifted
                arrow_map[Arrow(edge, True)] = lifted.dual
            candidate = cls.from_mapping(source, target, arrow_map)
            if candidate.images not in seen and candidate.is_valid():
                seen.add(candidate.images)
                found.append(candidate)
    return found


def brute_force_hom(source: TreeLike, target: TreeLike) -> List:
    """Filter every color map by validity; only for small trees."""
    cls = morphism_type(source)
    colors = cls.colors_of(plane_of(source))
    target_colors = cls.colors_of(plane_of(target))
    found = []
    for images in itertools.product(target_colors, repeat=len(colors)):
        candidate = cls(source, target, images)
        if candidate.is_valid():
            found.append(candidate)
    return found


def symmetrize_morphism(morphism: TreeMorphism) -> SymTreeMorphism:
    """The functor Ω_pl → Ω_sym on a morphism."""
    source, source_iso = symmetrize_with_map(morphism.source)
    target, target_iso = symmetrize_with_map(morphism.target)
    back = {canonical: original for original, canonical in source_iso.items()}
    return SymTreeMorphism.from_mapping(
        source,
        target,
        {edge: target_iso[morphism(back[edge])] for edge in source.tree.edges},
    )


def forget_root_morphism(morphism: TreeMorphism) -> CycTreeMorphism:
    """The functor Ω_pl → Ξ_pl on a morphism."""
    source, source_iso = forget_root_with_map(morphism.source)
    target, target_iso = forget_root_with_map(morphism.target)
    back = {canonical: original for original, canonical in source_iso.items()}
    mapping = {}
    for arrow in arrows(source.tree):
        original = back[arrow]
        image = Arrow(morphism(original.edge), original.upward)
        mapping[arrow] = target_iso[image]
    return CycTreeMorphism.from_mapping(source, target, mapping)


def forget_plane_morphism(morphism: CycTreeMorphism) -> RootableTreeMorphism:
    """The functor Ξ_pl → Ξ on a morphism."""
    source, source_iso = forget_plane_with_map(morphism.source)
    target, target_iso = forget_plane_with_map(morphism.target)
    back = {canonical: original for original, canonical in source_iso.items()}
    return RootableTreeMorphism.from_mapping(
        source,
        target,
        {arrow: target_iso[morphism(back[arrow])] for arrow in arrows(source.tree)},
    )


def morphism_from_json(data: Dict[str, Any]):
    """Decode a morphism document; the "kind" tag defaults to plane."""
    if not isinstance(data, dict) or not {"source", "target", "edges"} <= set(data):
        raise SerializationError("A morphism needs 'source', 'target' and 'edges'")
    kind = data.get("kind", "pl")
    source = _variant(data["source"], kind)
    target = _variant(data["target"], kind)
    cls = morphism_type(source)
    parse = EdgeRef.parse if cls in (TreeMorphism, SymTreeMorphism) else Arrow.parse
    mapping = {parse(k): parse(v) for k, v in data["edges"].items()}
    morphism = cls.from_mapping(source, target, mapping)
    if not morphism.is_valid():
        raise InvalidMorphismError("The edge map is not a morphism of free operads")
    return morphism


def _variant(tree_data: Any, kind: str):
    if isinstance(tree_data, dict) and "kind" in tree_data:
        return variant_from_json(tree_data)
    if kind == "pl":
        return Tree.from_json(tree_data)
    return variant_from_json({"kind": kind, "tree": tree_data})
