"""Simplicial fixtures: nerves and constants that are 2-Segal, and corrupted copies that are not."""

from typing import Dict

from dendro_segal_toolkit.dst_core.exceptions import TruncationError

from .category import chain_category, cyclic_group, discrete_category, poset_category, truncated_additive_monoid
from .simplicial import TruncatedSimplicialSet, constant_point, constant_presheaf, duplicate_simplex, nerve_of_category

# below this every 2-Segal square a doubled simplex meets is degenerate
MIN_DOUBLING_TRUNCATION = 3


def example_categories() -> Dict[str, object]:
    return {
        "chain2": chain_category(2),
        "chain3": chain_category(3),
        "Z/2": cyclic_group(2),
        "Z/3": cyclic_group(3),
        "discrete2": discrete_category(2),
        "N<=2": truncated_additive_monoid(2),
        "divisibility": poset_category((1, 2, 3, 6), lambda a, b: b % a == 0, name="divisors of 6"),
    }


def two_segal_fixtures(truncation: int) -> Dict[str, TruncatedSimplicialSet]:
    """Positive fixtures: nerves of small categories and constant presheaves."""
    fixtures = {name: nerve_of_category(category, truncation) for name, category in example_categories().items()}
    fixtures["point"] = constant_point(truncation)
    fixtures["constant2"] = constant_presheaf(truncation, ("a", "b"))
    return fixtures


def non_two_segal_fixtures(truncation: int) -> Dict[str, TruncatedSimplicialSet]:
    """
    Negative fixtures: a simplex of dimension >= 3 doubled with all its faces.
    The copy and the original agree on every proper face, so some 2-Segal
    square with 0 < j - i < m fails to be injective.

    Raises:
        TruncationError: truncation below MIN_DOUBLING_TRUNCATION
    """
    if truncation < MIN_DOUBLING_TRUNCATION:
        raise TruncationError(
            f"Doubled simplices need truncation >= {MIN_DOUBLING_TRUNCATION}, got {truncation}"
        )
    top = MIN_DOUBLING_TRUNCATION
    sources = {
        "point": constant_point(truncation),
        "chain2": nerve_of_category(chain_category(2), truncation),
        "chain3": nerve_of_category(chain_category(3), truncation),
        "Z/2": nerve_of_category(cyclic_group(2), truncation),
        "discrete2": nerve_of_category(discrete_category(2), truncation),
    }
    fixtures = {}
    for name, X in sources.items():
        fixtures[f"{name}+doubled{top}"] = duplicate_simplex(X, top, X.level(top)[-1])
    point = sources["point"]
    fixtures[f"point+doubled{truncation}"] = duplicate_simplex(point, truncation, point.level(truncation)[0])
    return fixtures


def available_non_two_segal_fixtures(truncation: int) -> Dict[str, TruncatedSimplicialSet]:
    """The negative fixtures, or none when the truncation is too low to build them."""
    if truncation < MIN_DOUBLING_TRUNCATION:
        return {}
    return non_two_segal_fixtures(truncation)


def doubled_triangle(truncation: int) -> TruncatedSimplicialSet:
    """Two 2-simplices over the spine of the non-identity pair in chain3: not 1-Segal."""
    X = nerve_of_category(chain_category(3), truncation)
    return duplicate_simplex(X, 2, ("0<=1", "1<=2"))
