"""Operad fixtures: terminal, category and chain operads, invertible or not."""

import random
from typing import Dict, List

from dendro_segal_toolkit.modules.presheaves import (
    chain_category,
    cyclic_group,
    discrete_category,
    poset_category,
)

from .operad import FiniteOperad, operad_of_category, operad_of_chains, relabel, terminal_operad


def invertible_operads(arity_bound: int) -> Dict[str, FiniteOperad]:
    return {
        "terminal": terminal_operad(arity_bound),
        "chains(chain2)": operad_of_chains(chain_category(2), arity_bound),
        "chains(chain3)": operad_of_chains(chain_category(3), arity_bound),
        "chains(Z/2)": operad_of_chains(cyclic_group(2), arity_bound),
        "chains(discrete2)": operad_of_chains(discrete_category(2), arity_bound),
    }


def non_invertible_operads(arity_bound: int) -> Dict[str, FiniteOperad]:
    return {
        "poset{0<1}": operad_of_category(chain_category(2), arity_bound),
        "Z/2": operad_of_category(cyclic_group(2), arity_bound),
        "discrete2": operad_of_category(discrete_category(2), arity_bound),
        "terminal{a,b}": terminal_operad(arity_bound, colors=("a", "b")),
        "terminal without constants": terminal_operad(arity_bound, nullary=False),
    }


def operad_fixtures(arity_bound: int) -> Dict[str, FiniteOperad]:
    return {**invertible_operads(arity_bound), **non_invertible_operads(arity_bound)}


def random_poset(rng: random.Random, max_elements: int) -> List[tuple]:
    """A random partial order on {0..k-1}, k <= max_elements, as its list of relations a <= b."""
    size = rng.randint(1, max_elements)
    relation = {(a, a) for a in range(size)}
    relation |= {(a, b) for a in range(size) for b in range(a + 1, size) if rng.random() < 0.5}
    changed = True
    while changed:
        closure = {(a, d) for a, b in relation for c, d in relation if b == c}
        changed = not closure <= relation
        relation |= closure
    return sorted(relation)


def random_invertible_operad(rng: random.Random, max_colors: int = 3, arity_bound: int = 3) -> FiniteOperad:
    """
    The chain operad of a random poset with at most ``max_colors`` morphisms,
    under a random relabeling of its operations.
    """
    while True:
        relation = random_poset(rng, max_colors)
        if len(relation) <= max_colors:
            break
    elements = sorted({a for a, _ in relation})
    category = poset_category(elements, lambda a, b: (a, b) in relation, name=f"random poset {relation}")
    operad = operad_of_chains(category, arity_bound)
    labels = list(range(len(operad.operations)))
    rng.shuffle(labels)
    rename = {op: f"op{k}" for op, k in zip(operad.operations, labels)}
    return relabel(operad, rename, name=f"random chains({category.name})")
