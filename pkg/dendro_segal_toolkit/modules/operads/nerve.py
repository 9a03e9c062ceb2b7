"""
The dendroidal nerve of a finite operad and the invertibility criteria.

An element of N(O)(T) for T ≠ η is a tuple of operations, one per vertex of
T in preorder, whose colors agree along every inner edge; at η it is a
color. A morphism α: S → T acts by sending the vertex v of S to the
composite, in O, of the operations on the vertices of T that lie between
α(v) and the images of the inputs of v.
"""

import itertools
import logging
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from dendro_segal_toolkit.dst_core.exceptions import ArityBoundError, ArityMismatchError, InvalidMorphismError
from dendro_segal_toolkit.dst_core.verdict import CheckResult
from dendro_segal_toolkit.modules.localization import collapse_map, is_boundary_preserving
from dendro_segal_toolkit.modules.presheaves import DendroidalSet, check_invertible
from dendro_segal_toolkit.modules.tree_hom import TreeMorphism, hom
from dendro_segal_toolkit.modules.trees import ETA, ROOT, EdgeRef, Tree, enumerate_trees, make_corolla, make_linear

from .operad import Color, FiniteOperad, OpId, inner_tuples

logger = logging.getLogger(__name__)


def corolla_composite_tree(k: int, arities: Sequence[int]) -> Tree:
    """T_k^{n_1..n_k}: the corolla C_{n_i} grafted onto the i-th leaf of C_k."""
    if len(arities) != k:
        raise ArityMismatchError(f"{len(arities)} arities for a corolla with {k} leaves")
    return Tree(tuple(make_corolla(n) for n in arities))


def _fill(operad: FiniteOperad, tree: Tree, output: Optional[Color]) -> Iterator[Tuple[OpId, ...]]:
    """Labelings of the vertices of ``tree`` in preorder, root output fixed unless None."""
    if tree.is_eta:
        yield ()
        return
    arity = len(tree.children)
    if output is None:
        candidates = [op for op, sig in operad.operations.items() if sig.arity == arity]
    else:
        candidates = operad.by_output.get((output, arity), [])
    for op in candidates:
        inputs = operad.signature(op).inputs
        options = [list(_fill(operad, child, color)) for child, color in zip(tree.children, inputs)]
        for parts in itertools.product(*options):
            yield (op,) + tuple(itertools.chain.from_iterable(parts))


class OperadNerve(DendroidalSet):
    """N(O) on the trees with at most ``max_vertices`` vertices of arity at most the bound of O."""

    def __init__(self, operad: FiniteOperad, max_vertices: int = 3):
        super().__init__(max_vertices, operad.arity_bound, name=f"N({operad.name})")
        self.operad = operad
        self._values: Dict[Tree, Tuple] = {}

    def value(self, tree: Tree) -> Tuple:
        if tree not in self._values:
            if tree.is_eta:
                self._values[tree] = tuple(self.operad.colors)
            else:
                self._values[tree] = tuple(_fill(self.operad, tree, None))
        return self._values[tree]

    def edge_colors(self, tree: Tree, x) -> Dict[EdgeRef, Color]:
        if tree.is_eta:
            return {ROOT: x}
        ops = dict(zip(tree.vertices, x))
        colors = {ROOT: self.operad.signature(ops[ROOT]).output}
        for vertex in tree.vertices:
            for edge, color in zip(tree.inputs(vertex), self.operad.signature(ops[vertex]).inputs):
                colors[edge] = color
        return colors

    def composite(self, tree: Tree, x, output: EdgeRef, inputs: Sequence[EdgeRef]) -> OpId:
        """The composite of the labels between ``output`` and the cut ``inputs``."""
        colors = self.edge_colors(tree, x)
        ops = dict(zip(tree.vertices, x)) if not tree.is_eta else {}
        stops = set(inputs)

        def walk(edge: EdgeRef) -> OpId:
            if edge in stops:
                return self.operad.units[colors[edge]]
            if edge not in ops:
                raise InvalidMorphismError(f"leaf {edge} of {tree.encoding} lies outside the cut {list(inputs)}")
            return self.operad.compose(ops[edge], [walk(child) for child in tree.inputs(edge)])

        return walk(output)

    def act(self, alpha: TreeMorphism, x):
        source, target = alpha.source_tree, alpha.target_tree
        if source.is_eta:
            return self.edge_colors(target, x)[alpha(ROOT)]
        return tuple(
            self.composite(target, x, alpha(v), [alpha(e) for e in source.inputs(v)]) for v in source.vertices
        )


def dendroidal_nerve(operad: FiniteOperad, tree: Tree) -> Tuple:
    """
    N(O)(T).

    Raises:
        ArityBoundError: if a vertex of T has more inputs than the arity bound of O
    """
    if not tree.is_eta and tree.max_vertex_arity > operad.arity_bound:
        raise ArityBoundError(f"{tree.encoding} has a vertex beyond the arity bound {operad.arity_bound}")
    return OperadNerve(operad, max_vertices=max(tree.num_vertices, 1)).value(tree)


def is_invertible_operad(operad: FiniteOperad) -> CheckResult:
    """
    Every unit map and every composition map
    ∐_{y} Π O(x^i; y_i) × O(y_1..y_k; z) → O(x; z) within the arity bound
    is a bijection.
    """
    A = operad.arity_bound
    scope = f"{operad.name or 'operad'}, arity<={A}"
    units = set(operad.units.values())
    for op, sig in operad.operations.items():
        if sig.arity == 1 and op not in units:
            logger.debug(f"{op!r} is a unary operation that is not a unit")
            return CheckResult.fail(f"the unary operation {op!r} is not a unit", scope)
    for k in range(1, A + 1):
        for arities in _arity_shapes(k, A):
            n = sum(arities)
            hits: Dict[OpId, int] = {}
            for outer in (op for op, sig in operad.operations.items() if sig.arity == k):
                slots = operad.signature(outer).inputs
                for inners in inner_tuples(operad, slots, n):
                    if tuple(operad.arity(i) for i in inners) != arities:
                        continue
                    result = operad.compose(outer, inners)
                    hits[result] = hits.get(result, 0) + 1
            shape = f"k={k}, n={list(arities)}"
            for op, count in hits.items():
                if count > 1:
                    logger.debug(f"{op!r} has {count} decompositions of shape {shape}")
                    return CheckResult.fail(f"{op!r} has {count} decompositions of shape {shape}", scope)
            for op, sig in operad.operations.items():
                if sig.arity == n and op not in hits:
                    logger.debug(f"{op!r} has no decomposition of shape {shape}")
                    return CheckResult.fail(f"{op!r} has no decomposition of shape {shape}", scope)
    return CheckResult.ok(scope)


def _arity_shapes(k: int, bound: int) -> Iterator[Tuple[int, ...]]:
    for arities in itertools.product(range(bound + 1), repeat=k):
        if sum(arities) <= bound:
            yield arities


def _bijective(elements, function, codomain) -> bool:
    images = [function(x) for x in elements]
    return len(set(images)) == len(images) == len(set(codomain)) and set(images) <= set(codomain)


def invertibility_through_trees(nerve: OperadNerve) -> CheckResult:
    """
    The unit coproduct as N(C_1 → η) and the composition coproducts as
    N(C_n → T_k^{n_1..n_k}), all required to be bijections.
    """
    A = nerve.operad.arity_bound
    scope = f"{nerve.name}, trees T_k^(n_1..n_k) with n<={A}"
    unit_map = TreeMorphism(make_corolla(1), ETA, (ROOT, ROOT))
    if not _bijective(nerve.value(ETA), lambda x: nerve.act(unit_map, x), nerve.value(make_corolla(1))):
        return CheckResult.fail("N(C_1 → η) is not a bijection", scope)
    for k in range(1, A + 1):
        for arities in _arity_shapes(k, A):
            tree = corolla_composite_tree(k, arities)
            alpha = collapse_map(tree)
            if not _bijective(nerve.value(tree), lambda x: nerve.act(alpha, x), nerve.value(alpha.source_tree)):
                return CheckResult.fail(f"N(collapse onto {tree.encoding}) is not a bijection", scope)
    return CheckResult.ok(scope)


def check_bp_inverted(nerve: OperadNerve, max_vertices: int = 2) -> CheckResult:
    """N(O) sends every boundary-preserving map between small trees to a bijection."""
    trees = [t for t in enumerate_trees(max_vertices, nerve.max_arity) if nerve.in_bounds(t)]
    scope = f"{nerve.name}, bp maps among vertices<={max_vertices}, arity<={nerve.max_arity}"
    checked = 0
    for source, target in itertools.product(trees, repeat=2):
        if source.arity != target.arity:
            continue
        for alpha in hom(source, target, root_image=ROOT):
            if not is_boundary_preserving(alpha):
                continue
            checked += 1
            if not _bijective(nerve.value(target), lambda x: nerve.act(alpha, x), nerve.value(source)):
                return CheckResult.fail(f"N({alpha.to_json()}) is not a bijection", scope)
    return CheckResult.ok(f"{scope}, {checked} maps")


class InvertibilityCriteria(NamedTuple):
    bp_inverted: CheckResult
    collapse_inverted: CheckResult
    invertible: CheckResult

    def agree(self) -> bool:
        return bool(self.bp_inverted) == bool(self.collapse_inverted) == bool(self.invertible)


def characterize_invertible(
    operad: FiniteOperad, max_vertices: int = 3, bp_max_vertices: int = 2
) -> InvertibilityCriteria:
    """
    The three equivalent conditions: the nerve inverts boundary-preserving
    maps, the nerve inverts collapse maps, and the operad is invertible.
    The last is read off the corolla composite trees and cross-checked
    against the tables.
    """
    nerve = OperadNerve(operad, max_vertices)
    through_trees = invertibility_through_trees(nerve)
    direct = is_invertible_operad(operad)
    if bool(through_trees) != bool(direct):
        logger.warning(f"{operad.name}: tables say {bool(direct)}, corolla trees say {bool(through_trees)}")
    criteria = InvertibilityCriteria(check_bp_inverted(nerve, bp_max_vertices), check_invertible(nerve), through_trees)
    logger.debug(f"{operad.name}: b1={bool(criteria[0])}, b2={bool(criteria[1])}, b3={bool(criteria[2])}")
    return criteria


def linear_levels(nerve: OperadNerve, truncation: int) -> List[Tuple]:
    """N(O) at η, L_1, ..., L_N, with each chain read from the leaf up to the root."""
    levels = [tuple(nerve.value(ETA))]
    for n in range(1, truncation + 1):
        levels.append(tuple(tuple(reversed(x)) for x in nerve.value(make_linear(n))))
    return levels
