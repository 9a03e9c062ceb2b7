"""Acceptance checks for the boundary functors."""

from typing import Any, Dict, List, Optional

from dendro_segal_toolkit.dst_core.exceptions import DSTError
from dendro_segal_toolkit.dst_core.suite import CheckModule, CheckSpec
from dendro_segal_toolkit.modules.simplex_targets import (
    compose_delta,
    compose_fin,
    compose_lambda,
    compose_pointed,
    delta_to_lambda,
    delta_to_pointed,
    identity_delta,
    identity_fin,
    identity_lambda,
    identity_pointed,
    lambda_to_fin,
)
from dendro_segal_toolkit.modules.tree_hom import (
    compose,
    example_morphism,
    identity,
)
from dendro_segal_toolkit.modules.tree_hom.checks import arrows_among, bound_scope, outgoing_arrows, variant_objects
from dendro_segal_toolkit.modules.trees import Tree, enumerate_trees, make_linear, plane_of

from .adjoint import bp_factorizations, cyclic_factorizations, factor_through_tf
from .boundary import collapse_map, collapse_maps, is_boundary_preserving, is_collapse
from .functors import (
    as_cyclic,
    as_rootable,
    as_symmetric,
    labs_map,
    lcyc_map,
    lcyc_map_contravariant,
    lpl_map,
    lpl_map_contravariant,
    lsym_map,
)
from .initiality import initial_maps, weak_fiber_objects

EXAMPLE_LPL = (0, 1, 2, 4, 4)

# functor, identity on L(T), composition in the direction of the functor
FLAVORS = {
    "pl": (lpl_map, lambda t: identity_delta(t.arity), lambda g, f: compose_delta(g, f)),
    "cyc": (lcyc_map, lambda t: identity_lambda(t.arity), lambda g, f: compose_lambda(g, f)),
    "sym": (lsym_map, lambda t: identity_pointed(t.arity + 1), lambda g, f: compose_pointed(f, g)),
    "rootable": (labs_map, lambda t: identity_fin(t.arity + 1), lambda g, f: compose_fin(f, g)),
}


def check_worked_example() -> Optional[str]:
    alpha = example_morphism()
    image = lpl_map(alpha)
    if image.values != EXAMPLE_LPL:
        return f"L_pl of the worked example is {list(image.values)}, expected {list(EXAMPLE_LPL)}"
    if lpl_map_contravariant(alpha) != image:
        return "covariant and contravariant L_pl disagree on the worked example"
    found = bp_factorizations(alpha)
    if len(found) != 1 or found[0] != factor_through_tf(alpha):
        return f"the worked example has {len(found)} boundary-preserving factorizations"
    return None


def _pairs(objects):
    return arrows_among(tuple(objects))


def check_descriptions_agree(trees: List[Tree], cyclic) -> Optional[str]:
    for alpha in _pairs(trees):
        if lpl_map(alpha) != lpl_map_contravariant(alpha):
            return f"L_pl descriptions disagree on {alpha.to_json()}"
    for alpha in _pairs(cyclic):
        if lcyc_map(alpha) != lcyc_map_contravariant(alpha):
            return f"L_cyc descriptions disagree on {alpha.to_json()}"
    return None


def check_functoriality(kind: str, objects) -> Optional[str]:
    functor, unit, compose_image = FLAVORS[kind]
    for obj in objects:
        if functor(identity(obj)) != unit(plane_of(obj)):
            return f"{kind}: the identity of {plane_of(obj).encoding} does not go to an identity"
    arrows = arrows_among(tuple(objects))
    outgoing = outgoing_arrows(arrows)
    images = {m: functor(m) for m in arrows}
    for f in arrows:
        for g in outgoing.get(f.target, ()):
            gf = compose(g, f)
            image_gf = images[gf] if gf in images else functor(gf)
            if image_gf != compose_image(images[g], images[f]):
                return f"{kind}: composite {g.to_json()} ∘ {f.to_json()} is not preserved"
    return None


def check_linear_constancy(max_vertices: int) -> Optional[str]:
    linear = [make_linear(k) for k in range(max_vertices + 1)]
    for alpha in _pairs(linear):
        if lpl_map(alpha) != identity_delta(1):
            return f"{alpha.to_json()} does not go to the identity of [1]"
    return None


def check_extension_squares(trees: List[Tree]) -> Optional[str]:
    """The plane functors agree with the symmetric and rootable ones after the comparisons."""
    for alpha in _pairs(trees):
        plane = lpl_map(alpha)
        cyclic = as_cyclic(alpha)
        if lsym_map(as_symmetric(alpha)) != delta_to_pointed(plane):
            return f"L_sym square fails on {alpha.to_json()}"
        if lcyc_map(cyclic) != delta_to_lambda(plane):
            return f"L_cyc square fails on {alpha.to_json()}"
        if labs_map(as_rootable(cyclic)) != lambda_to_fin(lcyc_map(cyclic)):
            return f"L_abs square fails on {alpha.to_json()}"
    return None


def check_boundary_preserving_invertible(variants: Dict[str, list]) -> Optional[str]:
    for kind, objects in variants.items():
        functor = FLAVORS[kind][0]
        for alpha in _pairs(objects):
            if not is_boundary_preserving(alpha):
                continue
            image = functor(alpha)
            invertible = image.is_iso if hasattr(image, "is_iso") else image.is_bijection
            if not invertible:
                return f"{kind}: boundary-preserving {alpha.to_json()} goes to {image}"
    return None


def check_collapse(trees: List[Tree], variants: Dict[str, list]) -> Optional[str]:
    for tree in trees:
        alpha = collapse_map(tree)
        if not alpha.is_valid() or not is_collapse(alpha):
            return f"collapse map of {tree.encoding} is not a boundary-preserving morphism"
        if lpl_map(alpha) != identity_delta(tree.arity):
            return f"L_pl of the collapse map of {tree.encoding} is not the identity"
    for kind, objects in variants.items():
        for value in objects:
            for alpha in collapse_maps(value):
                if not alpha.is_valid() or not is_collapse(alpha):
                    return f"{kind}: collapse map of {plane_of(value).encoding} is not boundary preserving"
    return None


def check_initiality(objects) -> Optional[str]:
    for value in objects:
        for fiber in weak_fiber_objects(value):
            found = initial_maps(fiber)
            if len(found) != 1:
                return (
                    f"{plane_of(value).encoding} over {fiber.structure_map}: "
                    f"{len(found)} maps from the corolla"
                )
    return None


def check_adjunction(trees: List[Tree], cyclic, max_arity: int) -> Optional[str]:
    for alpha in _pairs(trees):
        if alpha.target_tree.arity > max_arity:
            continue
        try:
            beta = factor_through_tf(alpha)
        except DSTError as e:
            return f"no factorization of {alpha.to_json()}: {e}"
        found = bp_factorizations(alpha)
        if found != [beta]:
            return f"{alpha.to_json()} has {len(found)} boundary-preserving factorizations"
    for alpha in _pairs(cyclic):
        if alpha.target_tree.arity > max_arity:
            continue
        found = cyclic_factorizations(alpha)
        if len(found) != 1:
            return f"cyclic {alpha.to_json()} has {len(found)} factorizations"
    return None


class LocalizationModule(CheckModule):
    """Boundary functors, weak fibers and the left adjoint construction."""

    @property
    def name(self) -> str:
        return "Localization"

    @property
    def version(self) -> str:
        return "1.0.0"

    @property
    def dependencies(self) -> List[str]:
        return ["TreeHom", "SimplexTargets"]

    def checks(self, context: Dict[str, Any]) -> List[CheckSpec]:
        trees = self.bounds(context, "trees")
        pair = self.bounds(context, "pairs")
        morph = self.bounds(context, "morphisms")
        var = self.bounds(context, "variants")
        singles = enumerate_trees(trees["max_vertices"], trees["max_arity"])
        pair_trees = enumerate_trees(pair["max_vertices"], pair["max_arity"])
        triple_trees = enumerate_trees(morph["max_vertices"], morph["max_arity"])
        variants = variant_objects(enumerate_trees(var["max_vertices"], var["max_arity"]))
        scope, pair_scope, var_scope = bound_scope(trees), bound_scope(pair), bound_scope(var)
        # plane trees at the pair bounds, the other kinds at the variant bounds
        mixed = {**variants, "pl": pair_trees}
        mixed_scope = f"pl {pair_scope}; sym, cyc, rootable {var_scope}"
        adjunction_arity = 4

        specs: List[CheckSpec] = [
            ("localization.worked_example", "worked example", check_worked_example),
            (
                "localization.descriptions_agree",
                f"pl {pair_scope}; cyc {var_scope}",
                lambda: check_descriptions_agree(pair_trees, variants["cyc"]),
            ),
            (
                "localization.extension_squares",
                pair_scope,
                lambda: check_extension_squares(pair_trees),
            ),
            (
                "localization.bp_invertible",
                mixed_scope,
                lambda: check_boundary_preserving_invertible(mixed),
            ),
            (
                "localization.collapse",
                f"{scope}; every kind {var_scope}",
                lambda: check_collapse(singles, variants),
            ),
            (
                "localization.linear_constancy",
                f"linear trees with <= {trees['max_vertices']} vertices",
                lambda: check_linear_constancy(trees["max_vertices"]),
            ),
            (
                "localization.adjunction",
                f"pl {bound_scope(morph)}; cyc {var_scope}; target arity<={adjunction_arity}",
                lambda: check_adjunction(triple_trees, variants["cyc"], adjunction_arity),
            ),
        ]
        for kind, objects in mixed.items():
            specs.append(
                (
                    f"localization.functoriality.{kind}",
                    pair_scope if kind == "pl" else var_scope,
                    lambda kind=kind, objects=objects: check_functoriality(kind, objects),
                )
            )
        initiality = {**variants, "pl": singles}
        for kind, objects in initiality.items():
            specs.append(
                (
                    f"localization.initiality.{kind}",
                    scope if kind == "pl" else var_scope,
                    lambda objects=objects: check_initiality(objects),
                )
            )
        return specs
