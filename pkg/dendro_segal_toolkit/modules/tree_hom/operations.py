"""
Operations of the free operad on a plane tree.

An operation with output b is an admissible cut above b: the inputs are the
boundary edges of a set of vertices that is closed downward toward b. The
empty vertex set gives the identity (b; b). Operations are determined by
their output and inputs, which is what makes edge maps enough to describe
morphisms.
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from dendro_segal_toolkit.modules.trees import EdgeRef, Tree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TreeOperation:
    output: EdgeRef
    inputs: Tuple[EdgeRef, ...]
    vertices: FrozenSet[EdgeRef] = field(default=frozenset(), compare=False)

    @property
    def arity(self) -> int:
        return len(self.inputs)

    @property
    def is_identity(self) -> bool:
        return not self.vertices

    def __str__(self) -> str:
        inputs = ", ".join(repr(str(e)) for e in self.inputs)
        return f"({inputs}; {str(self.output)!r})"


def _cuts_above(tree: Tree, edge: EdgeRef) -> List[Tuple[Tuple[EdgeRef, ...], FrozenSet[EdgeRef]]]:
    cuts = [((edge,), frozenset())]
    if tree.has_vertex(edge):
        options = [_cuts_above(tree, child) for child in tree.inputs(edge)]
        for combo in itertools.product(*options):
            inputs = tuple(itertools.chain.from_iterable(part[0] for part in combo))
            vertices = frozenset((edge,)).union(*(part[1] for part in combo))
            cuts.append((inputs, vertices))
    return cuts


@lru_cache(maxsize=None)
def operations_of(tree: Tree) -> Tuple[TreeOperation, ...]:
    """Every operation of the free operad on ``tree``, identities included."""
    ops = tuple(
        TreeOperation(edge, inputs, vertices)
        for edge in tree.edges
        for inputs, vertices in _cuts_above(tree, edge)
    )
    logger.debug(f"{tree.encoding} has {len(ops)} operations")
    return ops


@lru_cache(maxsize=None)
def _ordered_index(tree: Tree) -> Mapping[Tuple[EdgeRef, Tuple[EdgeRef, ...]], TreeOperation]:
    return {(op.output, op.inputs): op for op in operations_of(tree)}


@lru_cache(maxsize=None)
def _unordered_index(tree: Tree) -> Mapping[Tuple[EdgeRef, FrozenSet[EdgeRef]], TreeOperation]:
    return {(op.output, frozenset(op.inputs)): op for op in operations_of(tree)}


@lru_cache(maxsize=None)
def operations_by_signature(tree: Tree) -> Mapping[Tuple[EdgeRef, int], Tuple[TreeOperation, ...]]:
    """Operations grouped by (output, arity)."""
    grouped: Dict[Tuple[EdgeRef, int], List[TreeOperation]] = {}
    for op in operations_of(tree):
        grouped.setdefault((op.output, op.arity), []).append(op)
    return {key: tuple(ops) for key, ops in grouped.items()}


def match_operation(
    tree: Tree, output: EdgeRef, inputs: Sequence[EdgeRef], ordered: bool = True
) -> Optional[TreeOperation]:
    """
    The operation with this output and these inputs, or None.

    Unordered matching accepts the inputs in any order but requires them to
    be pairwise distinct.
    """
    inputs = tuple(inputs)
    if ordered:
        return _ordered_index(tree).get((output, inputs))
    as_set = frozenset(inputs)
    if len(as_set) != len(inputs):
        return None
    return _unordered_index(tree).get((output, as_set))


def non_identity_count(tree: Tree) -> int:
    return sum(1 for op in operations_of(tree) if not op.is_identity)
