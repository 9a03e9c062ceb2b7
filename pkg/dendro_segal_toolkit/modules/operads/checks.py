"""Acceptance checks for finite operads and their nerves."""

from typing import Any, Dict, List, Optional

from dendro_segal_toolkit.dst_core.suite import CheckModule, CheckSpec
from dendro_segal_toolkit.modules.presheaves import (
    chain_category,
    check_dendroidal_segal,
    cyclic_group,
    discrete_category,
    nerve_of_category,
    validate_dendroidal,
)
from dendro_segal_toolkit.modules.trees import ETA, make_corolla

from .catalog import invertible_operads, non_invertible_operads, operad_fixtures, random_invertible_operad
from .morphisms import find_operad_isomorphism
from .nerve import OperadNerve, characterize_invertible, is_invertible_operad, linear_levels
from .operad import corrupt_composition, operad_of_category, relabel, validate_operad


def check_fixtures_valid(arity_bound: int) -> Optional[str]:
    for name, operad in operad_fixtures(arity_bound).items():
        result = validate_operad(operad)
        if not result:
            return f"{name}: {result.counterexample}"
    broken = corrupt_composition(non_invertible_operads(arity_bound)["Z/2"])
    if validate_operad(broken):
        return "an operad with a corrupted composite still validates"
    return None


def check_invertibility(arity_bound: int) -> Optional[str]:
    for expected, fixtures in ((True, invertible_operads(arity_bound)), (False, non_invertible_operads(arity_bound))):
        for name, operad in fixtures.items():
            if bool(is_invertible_operad(operad)) != expected:
                return f"{name}: is_invertible_operad should be {expected}"
    return None


def check_characterization(arity_bound: int, max_vertices: int, max_colors: int, rng) -> Optional[str]:
    """b1 = b2 = b3 on every fixture and on random invertible tables."""
    fixtures = operad_fixtures(arity_bound)
    for k in range(3):
        fixtures[f"random{k}"] = random_invertible_operad(rng, max_colors, arity_bound)
    for name, operad in fixtures.items():
        criteria = characterize_invertible(operad, max_vertices)
        if not criteria.agree():
            return f"{name}: (b1, b2, b3) = {tuple(bool(c) for c in criteria)}"
        if bool(criteria.invertible) != bool(is_invertible_operad(operad)):
            return f"{name}: the corolla composite trees and the tables disagree on invertibility"
    return None


def check_nerves(arity_bound: int, max_vertices: int) -> Optional[str]:
    for name, operad in operad_fixtures(arity_bound).items():
        nerve = OperadNerve(operad, max_vertices)
        if set(nerve.value(ETA)) != set(operad.colors):
            return f"{name}: the nerve at η is not the set of colors"
        for n in range(arity_bound + 1):
            expected = {(op,) for op, sig in operad.operations.items() if sig.arity == n}
            if set(nerve.value(make_corolla(n))) != expected:
                return f"{name}: the nerve at C_{n} is not the set of {n}-ary operations"
        result = check_dendroidal_segal(nerve)
        if not result:
            return f"{name}: nerve is not Segal: {result.counterexample}"
    for name in ("chains(chain2)", "poset{0<1}"):
        nerve = OperadNerve(operad_fixtures(2)[name], max_vertices=2)
        result = validate_dendroidal(nerve, max_vertices=2, max_arity=2)
        if not result:
            return f"{name}: {result.counterexample}"
    return None


def check_linear_restriction(truncation: int, arity_bound: int) -> Optional[str]:
    """The nerve of a category as an operad, read on linear trees, is its simplicial nerve."""
    for category in (chain_category(2), chain_category(3), cyclic_group(2), discrete_category(2)):
        operad = operad_of_category(category, arity_bound)
        levels = linear_levels(OperadNerve(operad, max_vertices=truncation), truncation)
        X = nerve_of_category(category, truncation)
        for n, level in enumerate(levels):
            if set(level) != set(X.level(n)):
                return f"{category.name}: level {n} differs from the simplicial nerve"
    return None


def check_isomorphisms(arity_bound: int, rng) -> Optional[str]:
    for name, operad in invertible_operads(arity_bound).items():
        labels = list(range(len(operad.operations)))
        rng.shuffle(labels)
        copy = relabel(operad, {op: f"op{k}" for op, k in zip(operad.operations, labels)})
        iso = find_operad_isomorphism(operad, copy)
        if iso is None or not iso.is_isomorphism():
            return f"{name}: no isomorphism to a relabeled copy"
    fixtures = operad_fixtures(arity_bound)
    if find_operad_isomorphism(fixtures["poset{0<1}"], fixtures["discrete2"]) is not None:
        return "the poset operad is isomorphic to a discrete one"
    return None


class OperadsModule(CheckModule):
    """Finite operads, invertibility and the dendroidal nerve."""

    @property
    def name(self) -> str:
        return "Operads"

    @property
    def version(self) -> str:
        return "1.0.0"

    @property
    def dependencies(self) -> List[str]:
        return ["Presheaves"]

    def checks(self, context: Dict[str, Any]) -> List[CheckSpec]:
        ops = self.bounds(context, "operads")
        N = self.bounds(context, "truncation")
        A, V, colors = ops["arity_bound"], ops["nerve_max_vertices"], ops["max_colors"]
        rng = self.rng(context)
        scope = f"arity<={A}"
        nerve_scope = f"{scope}, nerve on trees with <= {V} vertices"
        return [
            ("operads.fixtures_valid", scope, lambda: check_fixtures_valid(A)),
            ("operads.invertibility", scope, lambda: check_invertibility(A)),
            (
                "operads.characterization",
                f"{nerve_scope}, bp maps among trees with <= 2 vertices",
                lambda: check_characterization(A, V, colors, rng),
            ),
            ("operads.nerves", nerve_scope, lambda: check_nerves(A, V)),
            ("operads.linear_restriction", f"N={N}", lambda: check_linear_restriction(N, A)),
            ("operads.isomorphisms", scope, lambda: check_isomorphisms(A, rng)),
        ]
