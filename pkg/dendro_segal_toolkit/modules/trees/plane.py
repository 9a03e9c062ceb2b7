"""
Plane rooted trees.

A Tree value is rooted at an edge. Either that edge is a leaf
(``children is None``, the trivial tree η) or a vertex sits on top of it with
an ordered, possibly empty, tuple of child trees. Edges are named by
EdgeRef paths of child indices starting at the root edge, so the same naming
scheme serves as the color set of the free operad on the tree.

Example:
    c2 = make_corolla(2)
    t = graft(c2, c2.leaves[0], make_corolla(3))
    print(t.encoding)   # [[e,e,e],e]
    print(t.arity)      # 4
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Dict, List, Optional, Tuple

from dendro_segal_toolkit.dst_core.exceptions import (
    InvalidEdgeError,
    SerializationError,
    TreeError,
)

logger = logging.getLogger(__name__)

ETA_JSON = "e"


@dataclass(frozen=True, order=True)
class EdgeRef:
    """Address of an edge: child indices followed from the root edge."""

    path: Tuple[int, ...] = ()

    def __str__(self) -> str:
        return ".".join(str(i) for i in self.path)

    def __repr__(self) -> str:
        return f"EdgeRef({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "EdgeRef":
        """Parse the dot-joined serialization ("" is the root edge)."""
        if text == "":
            return cls(())
        try:
            return cls(tuple(int(part) for part in text.split(".")))
        except ValueError as e:
            raise SerializationError(f"Invalid edge path '{text}'") from e

    @property
    def depth(self) -> int:
        return len(self.path)

    @property
    def parent(self) -> Optional["EdgeRef"]:
        if not self.path:
            return None
        return EdgeRef(self.path[:-1])

    def child(self, index: int) -> "EdgeRef":
        return EdgeRef(self.path + (index,))

    def is_prefix_of(self, other: "EdgeRef") -> bool:
        """True if ``other`` lies weakly above this edge."""
        return other.path[: len(self.path)] == self.path

    def lifted(self, prefix: "EdgeRef") -> "EdgeRef":
        """This path read inside a subtree rooted at ``prefix``."""
        return EdgeRef(prefix.path + self.path)


ROOT = EdgeRef(())


@dataclass(frozen=True, eq=False)
class Tree:
    """
    A finite plane rooted tree.

    Equality and hashing go through the canonical string encoding, so
    trees can be used as dictionary keys and in ``lru_cache`` arguments.
    """

    children: Optional[Tuple["Tree", ...]] = None

    def __post_init__(self):
        if self.children is not None and not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self.encoding == other.encoding

    def __hash__(self) -> int:
        return hash(self.encoding)

    def __repr__(self) -> str:
        return f"Tree({self.encoding})"

    @cached_property
    def encoding(self) -> str:
        if self.children is None:
            return "e"
        return "[" + ",".join(child.encoding for child in self.children) + "]"

    @property
    def sort_key(self) -> Tuple[int, str]:
        """Length-lexicographic key on the encoding."""
        return (len(self.encoding), self.encoding)

    @property
    def is_eta(self) -> bool:
        return self.children is None

    @cached_property
    def _index(self) -> Dict[EdgeRef, "Tree"]:
        index: Dict[EdgeRef, Tree] = {}

        def walk(tree: "Tree", at: EdgeRef) -> None:
            index[at] = tree
            if tree.children is not None:
                for i, child in enumerate(tree.children):
                    walk(child, at.child(i))

        walk(self, ROOT)
        return index

    @cached_property
    def edges(self) -> Tuple[EdgeRef, ...]:
        """All edges in depth-first preorder (root first)."""
        return tuple(self._index)

    @cached_property
    def edge_index(self) -> Dict[EdgeRef, int]:
        return {edge: i for i, edge in enumerate(self.edges)}

    @cached_property
    def vertices(self) -> Tuple[EdgeRef, ...]:
        """Vertices in preorder, each named by its output edge."""
        return tuple(e for e, sub in self._index.items() if sub.children is not None)

    @cached_property
    def leaves(self) -> Tuple[EdgeRef, ...]:
        """Leaf edges in planar order."""
        return tuple(e for e, sub in self._index.items() if sub.children is None)

    @property
    def arity(self) -> int:
        return len(self.leaves)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @cached_property
    def max_vertex_arity(self) -> int:
        return max((len(self._index[v].children) for v in self.vertices), default=0)

    @cached_property
    def leaf_intervals(self) -> Dict[EdgeRef, Tuple[int, int]]:
        """
        For every edge, (leaves strictly left of its subtree, that count plus
        the leaves of the subtree). Areas are numbered from these bounds.
        """
        intervals: Dict[EdgeRef, Tuple[int, int]] = {}
        position = 0
        for edge in self.edges:
            start = position
            if self._index[edge].children is None:
                position += 1
            intervals[edge] = start
        result = {}
        for edge in self.edges:
            result[edge] = (intervals[edge], intervals[edge] + self._index[edge].arity)
        return result

    def __contains__(self, edge: EdgeRef) -> bool:
        return edge in self._index

    def check_edge(self, edge: EdgeRef) -> None:
        if edge not in self._index:
            raise InvalidEdgeError(f"'{edge}' is not an edge of {self.encoding}")

    def subtree(self, edge: EdgeRef) -> "Tree":
        self.check_edge(edge)
        return self._index[edge]

    def has_vertex(self, edge: EdgeRef) -> bool:
        """True if a vertex sits on top of ``edge``."""
        return self.subtree(edge).children is not None

    def is_leaf(self, edge: EdgeRef) -> bool:
        return not self.has_vertex(edge)

    def is_internal(self, edge: EdgeRef) -> bool:
        return edge != ROOT and self.has_vertex(edge)

    def inputs(self, vertex: EdgeRef) -> Tuple[EdgeRef, ...]:
        """Input edges of the vertex above ``vertex``, in planar order."""
        sub = self.subtree(vertex)
        if sub.children is None:
            raise InvalidEdgeError(f"No vertex above edge '{vertex}'")
        return tuple(vertex.child(i) for i in range(len(sub.children)))

    def vertex_arity(self, vertex: EdgeRef) -> int:
        return len(self.inputs(vertex))

    def to_json(self) -> Any:
        if self.children is None:
            return ETA_JSON
        return {"v": [child.to_json() for child in self.children]}

    @classmethod
    def from_json(cls, data: Any) -> "Tree":
        if data == ETA_JSON:
            return ETA
        if isinstance(data, dict) and set(data) == {"v"} and isinstance(data["v"], list):
            return cls(tuple(cls.from_json(child) for child in data["v"]))
        raise SerializationError(f"Not a tree document: {data!r}")

    def pretty(self) -> str:
        """Plain-text rendering, one edge per line."""
        lines: List[str] = []
        for edge in self.edges:
            indent = "  " * edge.depth
            name = str(edge) if edge.path else "root"
            sub = self._index[edge]
            if sub.children is None:
                lines.append(f"{indent}{name}: leaf")
            else:
                lines.append(f"{indent}{name}: vertex/{len(sub.children)}")
        return "\n".join(lines)


ETA = Tree(None)


def decode(text: str) -> Tree:
    """Inverse of ``Tree.encoding``."""
    position = 0

    def parse() -> Tree:
        nonlocal position
        if position >= len(text):
            raise SerializationError(f"Truncated tree encoding '{text}'")
        token = text[position]
        if token == "e":
            position += 1
            return ETA
        if token != "[":
            raise SerializationError(f"Unexpected '{token}' in tree encoding '{text}'")
        position += 1
        children = []
        if position < len(text) and text[position] == "]":
            position += 1
            return Tree(())
        while True:
            children.append(parse())
            if position >= len(text):
                raise SerializationError(f"Truncated tree encoding '{text}'")
            if text[position] == ",":
                position += 1
            elif text[position] == "]":
                position += 1
                return Tree(tuple(children))
            else:
                raise SerializationError(
                    f"Unexpected '{text[position]}' in tree encoding '{text}'"
                )

    tree = parse()
    if position != len(text):
        raise SerializationError(f"Trailing characters in tree encoding '{text}'")
    return tree


def make_eta() -> Tree:
    return ETA


def make_corolla(n: int) -> Tree:
    if n < 0:
        raise TreeError(f"Corolla arity must be non-negative, got {n}")
    return Tree((ETA,) * n)


def make_linear(n: int) -> Tree:
    """A chain of ``n`` unary vertices; ``make_linear(0)`` is η."""
    if n < 0:
        raise TreeError(f"Linear tree length must be non-negative, got {n}")
    tree = ETA
    for _ in range(n):
        tree = Tree((tree,))
    return tree


def replace_subtree(tree: Tree, edge: EdgeRef, replacement: Tree) -> Tree:
    """The tree with the subtree above ``edge`` swapped for ``replacement``."""
    tree.check_edge(edge)

    def rebuild(current: Tree, path: Tuple[int, ...]) -> Tree:
        if not path:
            return replacement
        head, rest = path[0], path[1:]
        children = list(current.children)
        children[head] = rebuild(children[head], rest)
        return Tree(tuple(children))

    return rebuild(tree, edge.path)


def graft(base: Tree, leaf: EdgeRef, top: Tree) -> Tree:
    """Identify the root of ``top`` with the leaf ``leaf`` of ``base``."""
    if leaf not in base or not base.is_leaf(leaf):
        raise InvalidEdgeError(f"'{leaf}' is not a leaf of {base.encoding}")
    return replace_subtree(base, leaf, top)


def prune(tree: Tree, edge: EdgeRef) -> Tree:
    """Cut everything above ``edge``; ``edge`` becomes a leaf."""
    return replace_subtree(tree, edge, ETA)


def grafting_decompositions(tree: Tree) -> List[Tuple[EdgeRef, Tree, Tree]]:
    """All (e, lower, upper) with ``tree == graft(lower, e, upper)`` at internal e."""
    return [
        (edge, prune(tree, edge), tree.subtree(edge))
        for edge in tree.edges
        if tree.is_internal(edge)
    ]


def _compositions(total: int, parts: int):
    """Ordered tuples of ``parts`` non-negative integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _trees_with_vertices(vertices: int, max_arity: int) -> Tuple[Tree, ...]:
    if vertices == 0:
        return (ETA,)
    found = []
    for arity in range(max_arity + 1):
        for split in _compositions(vertices - 1, arity):
            pools = [_trees_with_vertices(part, max_arity) for part in split]
            for kids in itertools.product(*pools):
                found.append(Tree(tuple(kids)))
    return tuple(found)


def enumerate_trees(max_vertices: int, max_vertex_arity: int) -> List[Tree]:
    """
    All plane rooted trees with at most ``max_vertices`` vertices, each of
    arity at most ``max_vertex_arity``, in length-lexicographic order.
    """
    if max_vertices < 0 or max_vertex_arity < 0:
        raise TreeError("Enumeration bounds must be non-negative")
    trees = [
        tree
        for v in range(max_vertices + 1)
        for tree in _trees_with_vertices(v, max_vertex_arity)
    ]
    trees.sort(key=lambda t: t.sort_key)
    logger.debug(
        f"Enumerated {len(trees)} trees (vertices <= {max_vertices}, arity <= {max_vertex_arity})"
    )
    return trees


def count_trees(max_vertices: int, max_vertex_arity: int) -> int:
    """Number of trees within the bounds, by convolution of counting series."""
    size = max_vertices + 1
    exact = [0] * size
    exact[0] = 1
    for v in range(1, size):
        # forests[k][w]: ordered k-tuples of trees with w vertices in total
        forest = [1] + [0] * (v - 1)
        total = 1 if v == 1 else 0
        for _ in range(max_vertex_arity):
            forest = [
                sum(forest[w - u] * exact[u] for u in range(w + 1)) for w in range(v)
            ]
            total += forest[v - 1]
        exact[v] = total
    return sum(exact)
