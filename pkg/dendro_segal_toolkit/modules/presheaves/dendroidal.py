"""
Dendroidal sets within tree bounds.

A DendroidalSet is evaluated lazily: ``value(T)`` is the finite set at a
plane tree and ``act(α, x)`` the action of a tree morphism α: S → T on
x ∈ D(T). Two backends exist: restriction of a truncated simplicial set
along L_pl (here) and the nerve of a finite operad (``operads.nerve``).
"""

import itertools
import logging
from abc import ABC, abstractmethod
from typing import List, Optional, Tuple

from dendro_segal_toolkit.dst_core.exceptions import TruncationError
from dendro_segal_toolkit.dst_core.verdict import CheckResult
from dendro_segal_toolkit.modules.localization import collapse_map, lpl_map
from dendro_segal_toolkit.modules.tree_hom import TreeMorphism, compose, hom, identity
from dendro_segal_toolkit.modules.trees import (
    ETA,
    ROOT,
    EdgeRef,
    Tree,
    enumerate_trees,
    grafting_decompositions,
    make_corolla,
)

from .segal import TwoSegalSquare, pullback_defect
from .simplicial import Label, TruncatedSimplicialSet

logger = logging.getLogger(__name__)


class DendroidalSet(ABC):
    """A presheaf on Ω_pl, known on the trees within its bounds."""

    def __init__(self, max_vertices: int, max_arity: int, name: str = ""):
        self.max_vertices = max_vertices
        self.max_arity = max_arity
        self.name = name

    def in_bounds(self, tree: Tree) -> bool:
        return tree.num_vertices <= self.max_vertices and tree.max_vertex_arity <= self.max_arity

    @property
    def trees(self) -> List[Tree]:
        return [t for t in enumerate_trees(self.max_vertices, self.max_arity) if self.in_bounds(t)]

    @property
    def scope(self) -> str:
        return f"vertices<={self.max_vertices}, arity<={self.max_arity}"

    @abstractmethod
    def value(self, tree: Tree) -> Tuple[Label, ...]:
        """The finite set D(tree)."""
        pass

    @abstractmethod
    def act(self, alpha: TreeMorphism, x: Label) -> Label:
        """D(α)(x) for α: S → T and x ∈ D(T)."""
        pass


class RestrictedDendroidalSet(DendroidalSet):
    """L_pl^* X: the value at T is X_{arity T}, the action is X(L_pl α)."""

    def __init__(self, simplicial: TruncatedSimplicialSet, max_vertices: int = 2, max_arity: Optional[int] = None):
        N = simplicial.truncation
        super().__init__(max_vertices, N if max_arity is None else max_arity, name=f"L_pl^* {simplicial.name}")
        self.simplicial = simplicial

    def in_bounds(self, tree: Tree) -> bool:
        return super().in_bounds(tree) and tree.arity <= self.simplicial.truncation

    @property
    def scope(self) -> str:
        return f"{super().scope}, tree arity<={self.simplicial.truncation}"

    def value(self, tree: Tree) -> Tuple[Label, ...]:
        if tree.arity > self.simplicial.truncation:
            raise TruncationError(f"{tree.encoding} has arity beyond the truncation {self.simplicial.truncation}")
        return self.simplicial.level(tree.arity)

    def act(self, alpha: TreeMorphism, x: Label) -> Label:
        return self.simplicial.act(lpl_map(alpha), x)


def restrict_along_lpl(
    X: TruncatedSimplicialSet, max_vertices: int = 2, max_arity: Optional[int] = None
) -> RestrictedDendroidalSet:
    return RestrictedDendroidalSet(X, max_vertices, max_arity)


def edge_inclusion(tree: Tree, edge: EdgeRef) -> TreeMorphism:
    """η → T picking out ``edge``."""
    return TreeMorphism(ETA, tree, (edge,))


def grafting_inclusions(tree: Tree, edge: EdgeRef) -> Tuple[TreeMorphism, TreeMorphism]:
    """The inclusions of the lower and upper halves of T = T_1 ∪_e T_2."""
    lower, upper = [(lo, up) for e, lo, up in grafting_decompositions(tree) if e == edge][0]
    return (
        TreeMorphism(lower, tree, lower.edges),
        TreeMorphism(upper, tree, tuple(e.lifted(edge) for e in upper.edges)),
    )


def grafting_square_indices(tree: Tree, edge: EdgeRef) -> TwoSegalSquare:
    """The square (i, j, m) with i = f(0), j = f(1) for f = L_pl of the edge inclusion."""
    f = lpl_map(edge_inclusion(tree, edge))
    return TwoSegalSquare(f(0), f(1), tree.arity)


def check_square_correspondence(trees: List[Tree]) -> CheckResult:
    """Under L_pl every grafting square is the 2-Segal square of its edge."""
    scope = f"{len(trees)} trees"
    for tree in trees:
        for edge, _, _ in grafting_decompositions(tree):
            square = grafting_square_indices(tree, edge)
            lower, upper = grafting_inclusions(tree, edge)
            if lpl_map(upper) != square.upper or lpl_map(lower) != square.lower:
                return CheckResult.fail(f"{tree.encoding} at {edge}: faces differ from {square}", scope)
            if lpl_map(edge_inclusion(upper.source, ROOT)) != square.upper_edge:
                return CheckResult.fail(f"{tree.encoding} at {edge}: upper edge differs from {square}", scope)
            if lpl_map(edge_inclusion(lower.source, edge)) != square.lower_edge:
                return CheckResult.fail(f"{tree.encoding} at {edge}: lower edge differs from {square}", scope)
    return CheckResult.ok(scope)


def validate_dendroidal(D: DendroidalSet, max_vertices: int = 2, max_arity: int = 2) -> CheckResult:
    """Identities act trivially and composites act contravariantly on the small trees."""
    trees = [t for t in D.trees if t.num_vertices <= max_vertices and t.max_vertex_arity <= max_arity]
    scope = f"{D.scope}; morphisms among vertices<={max_vertices}, arity<={max_arity}"
    for tree in trees:
        for x in D.value(tree):
            if D.act(identity(tree), x) != x:
                return CheckResult.fail(f"the identity of {tree.encoding} moves {x!r}", scope)
    table = {(a, b): hom(a, b) for a in trees for b in trees}
    for a, b, c in itertools.product(trees, repeat=3):
        for f in table[a, b]:
            for g in table[b, c]:
                gf = compose(g, f)
                for x in D.value(c):
                    if D.act(gf, x) != D.act(f, D.act(g, x)):
                        return CheckResult.fail(f"D({g.to_json()} ∘ {f.to_json()}) on {x!r}", scope)
    return CheckResult.ok(scope)


def check_dendroidal_segal(D: DendroidalSet) -> CheckResult:
    """Every grafting square T ← T_1, T_2 ← η within bounds goes to a pullback."""
    checked = 0
    for tree in D.trees:
        for edge, lower, upper in grafting_decompositions(tree):
            if not (D.in_bounds(lower) and D.in_bounds(upper)):
                continue
            lower_incl, upper_incl = grafting_inclusions(tree, edge)
            problem = pullback_defect(
                D.value(tree),
                lambda x: D.act(lower_incl, x),
                lambda x: D.act(upper_incl, x),
                D.value(lower),
                D.value(upper),
                lambda a: D.act(edge_inclusion(lower, edge), a),
                lambda b: D.act(edge_inclusion(upper, ROOT), b),
            )
            checked += 1
            if problem:
                return CheckResult.fail(f"{tree.encoding} grafted at {edge}: {problem}", D.scope)
    return CheckResult.ok(f"{D.scope}, {checked} grafting squares")


def _is_bijection(elements, function, codomain) -> bool:
    images = {function(x) for x in elements}
    return len(images) == len(elements) == len(set(codomain)) and images <= set(codomain)


def check_invertible(D: DendroidalSet) -> CheckResult:
    """Every collapse map C_n → T within bounds acts bijectively."""
    for tree in D.trees:
        corolla = make_corolla(tree.arity)
        if not D.in_bounds(corolla):
            continue
        alpha = collapse_map(tree)
        if not _is_bijection(D.value(tree), lambda x: D.act(alpha, x), D.value(corolla)):
            return CheckResult.fail(f"the collapse map onto {tree.encoding} is not a bijection", D.scope)
    return CheckResult.ok(D.scope)


def check_covariantly_fibrant(D: DendroidalSet) -> CheckResult:
    """D(T) → Π D(η) along the leaf inclusions is a bijection for every T within bounds."""
    colors = D.value(ETA)
    for tree in D.trees:
        inclusions = [edge_inclusion(tree, leaf) for leaf in tree.leaves]
        product = list(itertools.product(colors, repeat=len(inclusions)))
        if not _is_bijection(
            D.value(tree), lambda x: tuple(D.act(incl, x) for incl in inclusions), product
        ):
            return CheckResult.fail(f"{tree.encoding} is not the product of its leaves", D.scope)
    return CheckResult.ok(D.scope)
