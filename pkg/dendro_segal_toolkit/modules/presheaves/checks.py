"""Acceptance checks for simplicial and dendroidal presheaves."""

from typing import Any, Dict, List, Optional

from dendro_segal_toolkit.dst_core.suite import CheckModule, CheckSpec
from dendro_segal_toolkit.modules.localization import collapse_map
from dendro_segal_toolkit.modules.trees import enumerate_trees, make_corolla, make_linear

from .catalog import available_non_two_segal_fixtures, doubled_triangle, example_categories, two_segal_fixtures
from .category import chain_category, validate_category
from .dendroidal import (
    check_covariantly_fibrant,
    check_dendroidal_segal,
    check_invertible,
    check_square_correspondence,
    restrict_along_lpl,
    validate_dendroidal,
)
from .segal import check_1segal, check_2segal, check_reduced_segal
from .simplicial import corrupt_face, nerve_of_category, validate_presheaf


def check_fixtures_valid(truncation: int, rng) -> Optional[str]:
    for name, category in example_categories().items():
        result = validate_category(category)
        if not result:
            return f"category {name}: {result.counterexample}"
    fixtures = {**two_segal_fixtures(truncation), **available_non_two_segal_fixtures(truncation)}
    for name, X in fixtures.items():
        result = validate_presheaf(X, rng)
        if not result:
            return f"{name}: {result.counterexample}"
    X = nerve_of_category(chain_category(2), truncation)
    broken = corrupt_face(X, 1, 0, ("0<=1",), 0)
    if validate_presheaf(broken, rng):
        return "a nerve with a corrupted face still validates"
    return None


def check_nerves_segal(truncation: int) -> Optional[str]:
    for name, X in two_segal_fixtures(truncation).items():
        for label, check in (("1-Segal", check_1segal), ("2-Segal", check_2segal)):
            result = check(X)
            if not result:
                return f"{name} is not {label}: {result.counterexample}"
    if check_1segal(doubled_triangle(truncation)):
        return "a doubled 2-simplex over a unique spine passes the 1-Segal check"
    return None


def check_segal_comparison(truncation: int) -> Optional[str]:
    """2-Segal ⟺ the restriction along L_pl is dendroidal Segal, on both kinds of fixture."""
    cases = ((True, two_segal_fixtures(truncation)), (False, available_non_two_segal_fixtures(truncation)))
    for expected, fixtures in cases:
        for name, X in fixtures.items():
            simplicial = bool(check_2segal(X))
            dendroidal = bool(check_dendroidal_segal(restrict_along_lpl(X)))
            if simplicial != expected:
                return f"{name}: check_2segal = {simplicial}, expected {expected}"
            if dendroidal != simplicial:
                return f"{name}: check_2segal = {simplicial} but the restriction gives {dendroidal}"
    return None


def check_reduced_covariant(truncation: int) -> Optional[str]:
    fixtures = {**two_segal_fixtures(truncation), **available_non_two_segal_fixtures(truncation)}
    for name, X in fixtures.items():
        D = restrict_along_lpl(X)
        reduced, fibrant = bool(check_reduced_segal(X)), bool(check_covariantly_fibrant(D))
        if reduced != fibrant:
            return f"{name}: reduced Segal = {reduced}, covariantly fibrant restriction = {fibrant}"
        if fibrant and not check_invertible(D):
            return f"{name}: covariantly fibrant but not invertible"
    return None


def check_restriction(truncation: int) -> Optional[str]:
    """Values at corollas and linear trees, collapse maps acting trivially, invertibility."""
    for name, X in two_segal_fixtures(truncation).items():
        D = restrict_along_lpl(X)
        for n in range(truncation + 1):
            if D.value(make_corolla(n)) != X.level(n):
                return f"{name}: value at C_{n} is not X_{n}"
        for k in range(truncation + 1):
            if D.value(make_linear(k)) != X.level(1):
                return f"{name}: value at the linear tree with {k} vertices is not X_1"
        for tree in D.trees:
            alpha = collapse_map(tree)
            if any(D.act(alpha, x) != x for x in D.value(tree)):
                return f"{name}: the collapse map onto {tree.encoding} acts nontrivially"
        if not check_invertible(D):
            return f"{name}: restriction along L_pl is not invertible"
    return None


def check_dendroidal_functoriality(truncation: int) -> Optional[str]:
    for name in ("chain2", "Z/2"):
        X = two_segal_fixtures(truncation)[name]
        result = validate_dendroidal(restrict_along_lpl(X), max_vertices=2, max_arity=2)
        if not result:
            return f"{name}: {result.counterexample}"
    return None


class PresheavesModule(CheckModule):
    """Truncated simplicial and dendroidal sets and their Segal conditions."""

    @property
    def name(self) -> str:
        return "Presheaves"

    @property
    def version(self) -> str:
        return "1.0.0"

    @property
    def dependencies(self) -> List[str]:
        return ["Localization"]

    def checks(self, context: Dict[str, Any]) -> List[CheckSpec]:
        N = self.bounds(context, "truncation")
        trees = self.bounds(context, "trees")
        rng = self.rng(context)
        singles = enumerate_trees(trees["max_vertices"], trees["max_arity"])
        scope = f"N={N}"
        return [
            ("presheaves.fixtures_valid", scope, lambda: check_fixtures_valid(N, rng)),
            ("presheaves.nerves_segal", scope, lambda: check_nerves_segal(N)),
            ("presheaves.segal_comparison", f"{scope}, trees with <= 2 vertices", lambda: check_segal_comparison(N)),
            (
                "presheaves.square_correspondence",
                f"vertices<={trees['max_vertices']}, arity<={trees['max_arity']}",
                lambda: _as_message(check_square_correspondence(singles)),
            ),
            ("presheaves.reduced_covariant", scope, lambda: check_reduced_covariant(N)),
            ("presheaves.restriction", scope, lambda: check_restriction(N)),
            ("presheaves.dendroidal_functoriality", "vertices<=2, arity<=2", lambda: check_dendroidal_functoriality(N)),
        ]


def _as_message(result) -> Optional[str]:
    return None if result else result.counterexample
