"""Acceptance checks for Δ, ℒ, Λ, Fin_* and Fin_ne."""

import itertools
from typing import Any, Dict, List, Optional

from dendro_segal_toolkit.dst_core.suite import CheckModule, CheckSpec

from .cyclic import (
    compose_lambda,
    count_lambda,
    delta_to_lambda,
    enumerate_lambda,
    identity_lambda,
    lambda_dual,
    rotation,
)
from .delta import (
    compose_delta,
    count_delta,
    degeneracy,
    degeneracy_indices,
    enumerate_delta,
    epi_mono,
    face,
    face_indices,
    identity_delta,
)
from .finite import (
    compose_fin,
    compose_pointed,
    delta_to_pointed,
    identity_fin,
    identity_pointed,
    lambda_to_fin,
)
from .linord import compose_linord, cut_dual_map, identity_linord, interval_dual_map


def _category_laws(objects, hom, compose, identity) -> Optional[str]:
    table = {(a, b): hom(a, b) for a in objects for b in objects}
    for (a, b), maps in table.items():
        for f in maps:
            if compose(identity(b), f) != f or compose(f, identity(a)) != f:
                return f"unit law fails on {f}"
    for a, b, c, d in itertools.product(objects, repeat=4):
        for f in table[a, b]:
            for g in table[b, c]:
                gf = compose(g, f)
                for h in table[c, d]:
                    if compose(h, gf) != compose(compose(h, g), f):
                        return f"associativity fails on {f}, {g}, {h}"
    return None


def check_delta(bound: int) -> Optional[str]:
    objects = range(bound + 1)
    for m, n in itertools.product(objects, repeat=2):
        maps = enumerate_delta(m, n)
        if len(maps) != count_delta(m, n) or len(set(maps)) != len(maps):
            return f"|Hom_Δ([{m}],[{n}])| = {len(maps)}, expected {count_delta(m, n)}"
        for f in maps:
            surjection, injection = epi_mono(f)
            if compose_delta(injection, surjection) != f:
                return f"epi-mono factorization of {f} does not recompose"
            rebuilt = identity_delta(injection.n_dst)
            for i in face_indices(injection):
                rebuilt = compose_delta(rebuilt, face(rebuilt.n_src, i))
            for j in degeneracy_indices(surjection):
                rebuilt = compose_delta(rebuilt, degeneracy(rebuilt.n_src, j))
            if rebuilt != f:
                return f"generators of {f} recompose to {rebuilt}"
    return _category_laws(range(min(bound, 2) + 1), enumerate_delta, compose_delta, identity_delta)


def check_lambda(bound: int) -> Optional[str]:
    objects = range(bound + 1)
    for m, n in itertools.product(objects, repeat=2):
        maps = enumerate_lambda(m, n)
        if len(maps) != count_lambda(m, n) or len(set(maps)) != len(maps):
            return f"|Hom_Λ([{m}],[{n}])| = {len(maps)}, expected {count_lambda(m, n)}"
    for n in objects:
        if compose_lambda(rotation(n, n), rotation(n)) != identity_lambda(n):
            return f"rotations of [{n}] do not compose to the identity"
    return _category_laws(objects, enumerate_lambda, compose_lambda, identity_lambda)


def check_cut_duality(bound: int) -> Optional[str]:
    objects = range(bound + 1)
    for m, n in itertools.product(objects, repeat=2):
        for f in enumerate_delta(m, n):
            if cut_dual_map(interval_dual_map(f)) != f:
                return f"cut_dual ∘ interval_dual is not the identity on {f}"
    for l, m, n in itertools.product(objects, repeat=3):
        for f in enumerate_delta(l, m):
            for g in enumerate_delta(m, n):
                composite = compose_linord(interval_dual_map(f), interval_dual_map(g))
                if interval_dual_map(compose_delta(g, f)) != composite:
                    return f"interval duality is not contravariant on {g} ∘ {f}"
                if cut_dual_map(composite) != compose_delta(g, f):
                    return f"cut_dual is not contravariant on {g} ∘ {f}"
    for n in objects:
        order = interval_dual_map(identity_delta(n)).source
        if cut_dual_map(identity_linord(order)) != identity_delta(n):
            return f"cut_dual does not preserve the identity of a {n}-element order"
    return None


def check_lambda_duality(bound: int) -> Optional[str]:
    objects = range(bound + 1)
    for m, n in itertools.product(objects, repeat=2):
        for f in enumerate_lambda(m, n):
            if lambda_dual(lambda_dual(f)) != f:
                return f"lambda_dual is not an involution on {f}"
    for l, m, n in itertools.product(objects, repeat=3):
        for f in enumerate_lambda(l, m):
            for g in enumerate_lambda(m, n):
                if lambda_dual(compose_lambda(g, f)) != compose_lambda(lambda_dual(f), lambda_dual(g)):
                    return f"lambda_dual is not contravariant on {g} ∘ {f}"
    for n in objects:
        if lambda_dual(identity_lambda(n)) != identity_lambda(n):
            return f"lambda_dual moves the identity of [{n}]"
    return None


def check_inclusions(bound: int) -> Optional[str]:
    """Δ → Λ, Δ → Fin_*^op and Λ → Fin_ne^op preserve identities and composites."""
    objects = range(bound + 1)
    for n in objects:
        if delta_to_lambda(identity_delta(n)) != identity_lambda(n):
            return f"delta_to_lambda moves the identity of [{n}]"
        if delta_to_pointed(identity_delta(n)) != identity_pointed(n + 1):
            return f"delta_to_pointed moves the identity of [{n}]"
        if lambda_to_fin(identity_lambda(n)) != identity_fin(n + 1):
            return f"lambda_to_fin moves the identity of [{n}]"
    for l, m, n in itertools.product(objects, repeat=3):
        for f in enumerate_delta(l, m):
            for g in enumerate_delta(m, n):
                gf = compose_delta(g, f)
                if delta_to_lambda(gf) != compose_lambda(delta_to_lambda(g), delta_to_lambda(f)):
                    return f"delta_to_lambda does not preserve {g} ∘ {f}"
                if delta_to_pointed(gf) != compose_pointed(delta_to_pointed(f), delta_to_pointed(g)):
                    return f"delta_to_pointed does not preserve {g} ∘ {f}"
        for f in enumerate_lambda(l, m):
            for g in enumerate_lambda(m, n):
                if lambda_to_fin(compose_lambda(g, f)) != compose_fin(lambda_to_fin(f), lambda_to_fin(g)):
                    return f"lambda_to_fin does not preserve {g} ∘ {f}"
    return None


class SimplexTargetsModule(CheckModule):
    """The target categories of the localization functors."""

    @property
    def name(self) -> str:
        return "SimplexTargets"

    @property
    def version(self) -> str:
        return "1.0.0"

    def checks(self, context: Dict[str, Any]) -> List[CheckSpec]:
        bound = min(3, self.bounds(context, "truncation") or 3)
        small = min(bound, 2)
        scope = f"[m],[n] <= [{bound}]"
        small_scope = f"[m],[n] <= [{small}]"
        return [
            ("simplex_targets.delta", scope, lambda: check_delta(bound)),
            ("simplex_targets.lambda", small_scope, lambda: check_lambda(small)),
            ("simplex_targets.cut_duality", scope, lambda: check_cut_duality(bound)),
            ("simplex_targets.lambda_duality", small_scope, lambda: check_lambda_duality(small)),
            ("simplex_targets.inclusions", small_scope, lambda: check_inclusions(small)),
        ]
