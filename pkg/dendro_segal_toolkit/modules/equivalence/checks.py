"""Acceptance checks for the equivalence between 2-Segal sets and invertible operads."""

from typing import Any, Dict, List, Optional

from dendro_segal_toolkit.dst_core.exceptions import EquivalenceError
from dendro_segal_toolkit.dst_core.suite import CheckModule, CheckSpec
from dendro_segal_toolkit.modules.operads import (
    invertible_operads,
    is_invertible_operad,
    non_invertible_operads,
    random_invertible_operad,
    terminal_operad,
    validate_operad,
)
from dendro_segal_toolkit.modules.presheaves import (
    MIN_DOUBLING_TRUNCATION,
    TruncatedSimplicialSet,
    available_non_two_segal_fixtures,
    check_2segal,
    check_dendroidal_segal,
    constant_point,
    restrict_along_lpl,
    two_segal_fixtures,
)

from .certificate import certify_simplicial, find_simplicial_isomorphism, roundtrip_operad, roundtrip_simplicial
from .construct import operad_to_simplicial, simplicial_to_operad

# at most 20 simplices per level up to level 3
EQUIVALENCE_FIXTURES = ("point", "constant2", "chain2", "chain3", "Z/2", "discrete2")


def equivalence_fixtures(truncation: int) -> Dict[str, TruncatedSimplicialSet]:
    fixtures = two_segal_fixtures(truncation)
    return {name: fixtures[name] for name in EQUIVALENCE_FIXTURES}


def check_to_operad(truncation: int) -> Optional[str]:
    """Fixtures give valid invertible operads; doubled simplices are rejected where they can be built."""
    for name, X in equivalence_fixtures(truncation).items():
        operad = simplicial_to_operad(X)
        for label, result in (("validate_operad", validate_operad(operad)), ("invertible", is_invertible_operad(operad))):
            if not result:
                return f"{name}: {label} fails: {result.counterexample}"
    for name, X in available_non_two_segal_fixtures(truncation).items():
        try:
            simplicial_to_operad(X)
        except EquivalenceError:
            continue
        return f"{name} is not 2-Segal but was accepted"
    return None


def check_to_simplicial(arity_bound: int) -> Optional[str]:
    for name, operad in invertible_operads(arity_bound).items():
        certificate = certify_simplicial(operad)
        if not certificate:
            return f"{name}: {certificate.counterexample}"
    point = operad_to_simplicial(terminal_operad(arity_bound))
    if find_simplicial_isomorphism(point, constant_point(arity_bound)) is None:
        return "the terminal operad does not give the point"
    for name, operad in non_invertible_operads(arity_bound).items():
        try:
            operad_to_simplicial(operad)
        except EquivalenceError:
            continue
        return f"{name} is not invertible but was accepted"
    return None


def check_operad_derived_segal(arity_bound: int) -> Optional[str]:
    """Simplicial sets coming from operads agree with their restriction along L_pl."""
    for name, operad in invertible_operads(arity_bound).items():
        X = operad_to_simplicial(operad)
        if not check_2segal(X) or not check_dendroidal_segal(restrict_along_lpl(X)):
            return f"{name}: the derived simplicial set fails a Segal condition"
    return None


def check_roundtrips(truncation: int, arity_bound: int, max_colors: int, rng) -> Optional[str]:
    operads = invertible_operads(arity_bound)
    for k in range(3):
        operads[f"random{k}"] = random_invertible_operad(rng, max_colors, arity_bound)
    for name, operad in operads.items():
        certificate = roundtrip_operad(operad)
        if not certificate:
            return f"{name}: {certificate.counterexample}"
    for name, X in equivalence_fixtures(truncation).items():
        certificate = roundtrip_simplicial(X)
        if not certificate:
            return f"{name}: {certificate.counterexample}"
    return None


class EquivalenceModule(CheckModule):
    """2-Segal sets and invertible operads, both directions and their roundtrips."""

    @property
    def name(self) -> str:
        return "Equivalence"

    @property
    def version(self) -> str:
        return "1.0.0"

    @property
    def dependencies(self) -> List[str]:
        return ["Operads"]

    def checks(self, context: Dict[str, Any]) -> List[CheckSpec]:
        ops = self.bounds(context, "operads")
        A, colors = ops["arity_bound"], ops["max_colors"]
        N = min(self.bounds(context, "truncation"), A)
        rng = self.rng(context)
        scope = f"N={N}, arity<={A}"
        to_operad_scope = scope
        if N < MIN_DOUBLING_TRUNCATION:
            to_operad_scope += f", no doubled simplices below N={MIN_DOUBLING_TRUNCATION}"
        return [
            ("equivalence.to_operad", to_operad_scope, lambda: check_to_operad(N)),
            ("equivalence.to_simplicial", scope, lambda: check_to_simplicial(A)),
            ("equivalence.operad_derived_segal", scope, lambda: check_operad_derived_segal(A)),
            ("equivalence.roundtrips", f"{scope}, random operads with <= {colors} colors", lambda: check_roundtrips(N, A, colors, rng)),
        ]
