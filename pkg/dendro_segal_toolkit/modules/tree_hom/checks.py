"""Acceptance checks for tree morphisms."""

from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

from dendro_segal_toolkit.dst_core.suite import CheckModule, CheckSpec
from dendro_segal_toolkit.modules.trees import (
    Tree,
    enumerate_trees,
    forget_plane,
    forget_root,
    plane_of,
    symmetrize,
)

from .catalog import example_morphism, example_source, example_target
from .morphisms import (
    brute_force_hom,
    compose,
    forget_plane_morphism,
    forget_root_morphism,
    hom,
    identity,
    morphism_type,
    symmetrize_morphism,
)
from .operations import non_identity_count, operations_of

BRUTE_FORCE_LIMIT = 4096
# sources tried per sampled arrow before falling back to an identity
SAMPLE_TRIES = 16


def bound_scope(bounds: Dict[str, int]) -> str:
    return f"vertices<={bounds['max_vertices']}, arity<={bounds['max_arity']}"


def check_worked_example() -> Optional[str]:
    left, right = example_source(), example_target()
    if non_identity_count(left) != 3:
        return f"left tree has {non_identity_count(left)} non-identity operations, expected 3"
    if non_identity_count(right) != 11:
        return f"right tree has {non_identity_count(right)} non-identity operations, expected 11"
    if not example_morphism().is_valid():
        return "the worked example morphism does not validate"
    return None


def check_operation_uniqueness(trees: List[Tree]) -> Optional[str]:
    for tree in trees:
        keys = [(op.output, op.inputs) for op in operations_of(tree)]
        if len(keys) != len(set(keys)):
            return f"duplicate operation signature in {tree.encoding}"
    return None


@lru_cache(maxsize=8)
def arrows_among(objects: Tuple[Any, ...]) -> Tuple[Any, ...]:
    """Every morphism between two of ``objects``, grouped by source."""
    return tuple(m for source in objects for target in objects for m in hom(source, target))


def outgoing_arrows(arrows) -> Dict[Any, list]:
    table: Dict[Any, list] = {}
    for m in arrows:
        table.setdefault(m.source, []).append(m)
    return table


def check_category_laws(objects, rng=None, samples: int = 0, sample_pool=()) -> Optional[str]:
    """
    Unit laws on every morphism and associativity on every composable triple
    of ``objects``. With a ``sample_pool``, ``samples`` more triples are drawn
    at random ending in its trees that are larger than any of ``objects``.
    """
    arrows = arrows_among(tuple(objects))
    for f in arrows:
        if not f.is_valid():
            return f"hom returned an invalid map {f.to_json()}"
        if compose(identity(f.target), f) != f or compose(f, identity(f.source)) != f:
            return f"unit law fails on {f.to_json()}"

    composites: Dict[Tuple[Any, Any], Any] = {}

    def composite(g, f):
        key = (g, f)
        if key not in composites:
            composites[key] = compose(g, f)
        return composites[key]

    outgoing = outgoing_arrows(arrows)
    for f in arrows:
        for g in outgoing.get(f.target, ()):
            gf = composite(g, f)
            if not gf.is_valid():
                return f"composite of {f.to_json()} and {g.to_json()} is not a morphism"
            for h in outgoing.get(g.target, ()):
                if composite(h, gf) != composite(composite(h, g), f):
                    return f"associativity fails on {f.to_json()}, {g.to_json()}, {h.to_json()}"

    largest = max((plane_of(o).num_vertices for o in objects), default=-1)
    targets = [t for t in sample_pool if plane_of(t).num_vertices > largest]
    if samples and targets:
        return _sampled_associativity(list(sample_pool), targets, rng, samples)
    return None


def _arrow_into(target, by_size: Dict[int, list], rng, cache: Dict) -> Any:
    """A random morphism into ``target`` from a tree with no more vertices; the identity if none turns up."""
    sizes = [size for size in by_size if size <= plane_of(target).num_vertices]
    for _ in range(SAMPLE_TRIES):
        source = rng.choice(by_size[rng.choice(sizes)])
        if (source, target) not in cache:
            cache[source, target] = hom(source, target)
        if cache[source, target]:
            return rng.choice(cache[source, target])
    return identity(target)


def _sampled_associativity(pool: List[Any], targets: List[Any], rng, samples: int) -> Optional[str]:
    by_size: Dict[int, list] = {}
    for tree in pool:
        by_size.setdefault(plane_of(tree).num_vertices, []).append(tree)
    cache: Dict = {}
    for _ in range(samples):
        h = _arrow_into(rng.choice(targets), by_size, rng, cache)
        g = _arrow_into(h.source, by_size, rng, cache)
        f = _arrow_into(g.source, by_size, rng, cache)
        gf = compose(g, f)
        if not gf.is_valid() or not compose(h, g).is_valid():
            return f"sampled composite through {plane_of(g.source).encoding} is not a morphism"
        if compose(h, gf) != compose(compose(h, g), f):
            return f"associativity fails on {f.to_json()}, {g.to_json()}, {h.to_json()}"
    return None


def check_brute_force_agreement(objects) -> Optional[str]:
    """hom equals the validity filter of all color maps, where that is affordable."""
    for source in objects:
        cls = morphism_type(source)
        n_colors = len(cls.colors_of(plane_of(source)))
        for target in objects:
            n_target = len(cls.colors_of(plane_of(target)))
            if n_target ** n_colors > BRUTE_FORCE_LIMIT:
                continue
            fast = {m.images for m in hom(source, target)}
            slow = {m.images for m in brute_force_hom(source, target)}
            if fast != slow or len(fast) != len(hom(source, target)):
                return (
                    f"{cls.kind} hom({plane_of(source).encoding}, {plane_of(target).encoding}): "
                    f"{len(fast)} enumerated, {len(slow)} by brute force"
                )
    return None


def check_functoriality(trees: List[Tree]) -> Optional[str]:
    """Ω_pl → Ω_sym, Ω_pl → Ξ_pl and Ξ_pl → Ξ preserve identities and composites."""
    arrows = arrows_among(tuple(trees))
    outgoing = outgoing_arrows(arrows)
    functors = [
        ("symmetrize", symmetrize_morphism),
        ("forget_root", forget_root_morphism),
        ("forget_plane", lambda m: forget_plane_morphism(forget_root_morphism(m))),
    ]
    for label, functor in functors:
        for tree in trees:
            image = functor(identity(tree))
            if image != identity(image.source):
                return f"{label} does not preserve the identity of {tree.encoding}"
        images = {m: functor(m) for m in arrows}
        for f, image in images.items():
            if not image.is_valid():
                return f"{label} of {f.to_json()} is not a morphism"
        for f in arrows:
            for g in outgoing.get(f.target, ()):
                gf = compose(g, f)
                image_gf = images[gf] if gf in images else functor(gf)
                if image_gf != compose(images[g], images[f]):
                    return f"{label} does not preserve {g.to_json()} ∘ {f.to_json()}"
    return None


def variant_objects(trees: List[Tree]) -> Dict[str, list]:
    cyc = sorted({forget_root(t) for t in trees}, key=lambda c: c.tree.sort_key)
    return {
        "pl": list(trees),
        "sym": sorted({symmetrize(t) for t in trees}, key=lambda s: s.tree.sort_key),
        "cyc": cyc,
        "rootable": sorted({forget_plane(c) for c in cyc}, key=lambda r: r.tree.sort_key),
    }


class TreeHomModule(CheckModule):
    """Free operads of trees and the categories Ω_pl, Ω_sym, Ξ_pl, Ξ."""

    @property
    def name(self) -> str:
        return "TreeHom"

    @property
    def version(self) -> str:
        return "1.0.0"

    @property
    def dependencies(self) -> List[str]:
        return ["Trees"]

    def checks(self, context: Dict[str, Any]) -> List[CheckSpec]:
        trees = self.bounds(context, "trees")
        pair = self.bounds(context, "pairs")
        morph = self.bounds(context, "morphisms")
        var = self.bounds(context, "variants")
        samples = context.get("samples", 200)
        rng = self.rng(context)
        single = enumerate_trees(trees["max_vertices"], trees["max_arity"])
        pair_trees = enumerate_trees(pair["max_vertices"], pair["max_arity"])
        triple_trees = enumerate_trees(morph["max_vertices"], morph["max_arity"])
        variants = variant_objects(enumerate_trees(var["max_vertices"], var["max_arity"]))
        scope = bound_scope(trees)
        var_scope = bound_scope(var)

        specs: List[CheckSpec] = [
            ("tree_hom.worked_example", "worked example", check_worked_example),
            ("tree_hom.operation_uniqueness", scope, lambda: check_operation_uniqueness(single)),
            (
                "tree_hom.category_laws.pl",
                f"all triples at {bound_scope(morph)}; {samples} sampled triples at {scope}",
                lambda: check_category_laws(triple_trees, rng, samples, single),
            ),
            (
                "tree_hom.functoriality",
                bound_scope(pair),
                lambda: check_functoriality(pair_trees),
            ),
        ]
        for kind, objects in variants.items():
            specs.append(
                (
                    f"tree_hom.brute_force.{kind}",
                    f"{var_scope}, at most {BRUTE_FORCE_LIMIT} candidate maps",
                    lambda objects=objects: check_brute_force_agreement(objects),
                )
            )
            if kind != "pl":
                specs.append(
                    (
                        f"tree_hom.category_laws.{kind}",
                        f"all triples at {var_scope}",
                        lambda objects=objects: check_category_laws(objects),
                    )
                )
        return specs
