"""
Initiality of the corolla in the weak fibers.

For a tree T of arity n and an identification ι of L(T) with [n], the
corolla C_n with the identity identification should admit exactly one
boundary-preserving map to (T, ι). Identifications are the identity in Δ,
the rotations in Λ, the pointed bijections in Fin_* and all bijections in
Fin_ne.
"""

import itertools
from typing import List

from dendro_segal_toolkit.dst_core.exceptions import InvalidMorphismError
from dendro_segal_toolkit.modules.simplex_targets import (
    FinMap,
    PointedMap,
    compose_delta,
    compose_fin,
    compose_lambda,
    compose_pointed,
    identity_delta,
    identity_fin,
    identity_lambda,
    identity_pointed,
    rotation,
)
from dendro_segal_toolkit.modules.tree_hom import hom
from dendro_segal_toolkit.modules.trees import (
    CycTree,
    RootableTree,
    SymTree,
    Tree,
    forget_plane_and_root,
    forget_root,
    make_corolla,
    plane_of,
    symmetrize,
)

from .boundary import WeakFiberObject, is_boundary_preserving
from .functors import labs_map, lcyc_map, lpl_map, lsym_map


def corolla_like(value):
    """The corolla of the same arity and flavor as ``value``."""
    corolla = make_corolla(plane_of(value).arity)
    if isinstance(value, Tree):
        return corolla
    if isinstance(value, SymTree):
        return symmetrize(corolla)
    if isinstance(value, CycTree):
        return forget_root(corolla)
    if isinstance(value, RootableTree):
        return forget_plane_and_root(corolla)
    raise InvalidMorphismError(f"Not a tree: {value!r}")


def identifications(value) -> List:
    """Every isomorphism L(value) ≅ [n] in the target category."""
    n = plane_of(value).arity
    if isinstance(value, Tree):
        return [identity_delta(n)]
    if isinstance(value, CycTree):
        return [rotation(n, k) for k in range(n + 1)]
    if isinstance(value, SymTree):
        return [
            PointedMap(n + 1, n + 1, (0,) + perm)
            for perm in itertools.permutations(range(1, n + 1))
        ]
    if isinstance(value, RootableTree):
        return [FinMap(n + 1, n + 1, perm) for perm in itertools.permutations(range(n + 1))]
    raise InvalidMorphismError(f"Not a tree: {value!r}")


def weak_fiber_objects(value) -> List[WeakFiberObject]:
    return [WeakFiberObject(value, iso) for iso in identifications(value)]


def _compatible(kappa, identification) -> bool:
    n = plane_of(kappa.source).arity
    if isinstance(kappa.source, Tree):
        return compose_delta(identification, lpl_map(kappa)) == identity_delta(n)
    if isinstance(kappa.source, CycTree):
        return compose_lambda(identification, lcyc_map(kappa)) == identity_lambda(n)
    if isinstance(kappa.source, SymTree):
        return compose_pointed(lsym_map(kappa), identification) == identity_pointed(n + 1)
    return compose_fin(labs_map(kappa), identification) == identity_fin(n + 1)


def initial_maps(fiber: WeakFiberObject) -> List:
    """Boundary-preserving maps from the corolla over the identification."""
    corolla = corolla_like(fiber.tree)
    return [
        kappa
        for kappa in hom(corolla, fiber.tree)
        if is_boundary_preserving(kappa) and _compatible(kappa, fiber.structure_map)
    ]
