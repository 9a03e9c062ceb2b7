"""Acceptance checks for the trees package."""

from typing import Any, Dict, List, Optional

from dendro_segal_toolkit.dst_core.suite import CheckModule, CheckSpec

from .plane import count_trees, decode, enumerate_trees, graft, Tree
from .rootable import (
    all_rerootings,
    forget_root,
    random_permutation_of_children,
    symmetrize,
    variant_from_json,
)


def check_enumeration(max_vertices: int, max_arity: int) -> Optional[str]:
    trees = enumerate_trees(max_vertices, max_arity)
    if len(set(trees)) != len(trees):
        return "enumeration contains duplicates"
    expected = count_trees(max_vertices, max_arity)
    if len(trees) != expected:
        return f"enumerated {len(trees)} trees, recursive count gives {expected}"
    for tree in trees:
        if tree.num_vertices > max_vertices or tree.max_vertex_arity > max_arity:
            return f"{tree.encoding} lies outside the bounds"
    return None


def check_codecs(trees: List[Tree]) -> Optional[str]:
    for tree in trees:
        if decode(tree.encoding) != tree:
            return f"string codec fails on {tree.encoding}"
        if Tree.from_json(tree.to_json()) != tree:
            return f"JSON codec fails on {tree.encoding}"
        for variant in (symmetrize(tree), forget_root(tree)):
            if variant_from_json(variant.to_json()) != variant:
                return f"{variant.kind} codec fails on {tree.encoding}"
    return None


def check_graft_arity(trees: List[Tree]) -> Optional[str]:
    for base in trees:
        for leaf in base.leaves:
            for top in trees:
                grafted = graft(base, leaf, top)
                if grafted.arity != base.arity + top.arity - 1:
                    return f"graft({base.encoding}, {leaf}, {top.encoding})"
    return None


def check_canonical_invariance(trees: List[Tree], rng, rounds: int = 3) -> Optional[str]:
    for tree in trees:
        sym = symmetrize(tree)
        for _ in range(rounds):
            shuffled = random_permutation_of_children(tree, rng)
            if symmetrize(shuffled) != sym:
                return f"symmetrize differs on permutation {shuffled.encoding} of {tree.encoding}"
        cyc = forget_root(tree)
        for rerooted in all_rerootings(tree):
            if forget_root(rerooted) != cyc:
                return f"forget_root differs on rerooting {rerooted.encoding} of {tree.encoding}"
    return None


class TreesModule(CheckModule):
    """Enumeration, codecs, grafting and canonical forms."""

    @property
    def name(self) -> str:
        return "Trees"

    @property
    def version(self) -> str:
        return "1.0.0"

    def checks(self, context: Dict[str, Any]) -> List[CheckSpec]:
        bounds = self.bounds(context, "trees")
        small = self.bounds(context, "morphisms")
        v, a = bounds["max_vertices"], bounds["max_arity"]
        sv, sa = small["max_vertices"], small["max_arity"]
        scope = f"vertices<={v}, arity<={a}"
        small_scope = f"vertices<={sv}, arity<={sa}"
        rng = self.rng(context)
        return [
            ("trees.enumeration", scope, lambda: check_enumeration(v, a)),
            ("trees.codecs", scope, lambda: check_codecs(enumerate_trees(v, a))),
            (
                "trees.graft_arity",
                small_scope,
                lambda: check_graft_arity(enumerate_trees(sv, sa)),
            ),
            (
                "trees.canonical_invariance",
                small_scope,
                lambda: check_canonical_invariance(enumerate_trees(sv, sa), rng),
            ),
        ]
