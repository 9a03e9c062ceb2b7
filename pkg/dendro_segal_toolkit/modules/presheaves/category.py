"""
Finite small categories, the sources of nerve fixtures.

Morphisms are named; ``composition[(g, f)]`` is the name of g ∘ f and is
present exactly when f and g are composable.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Hashable, List, Sequence, Tuple

from dendro_segal_toolkit.dst_core.exceptions import CompositionMismatchError, SerializationError
from dendro_segal_toolkit.dst_core.verdict import CheckResult

logger = logging.getLogger(__name__)


@dataclass
class SmallCategory:
    objects: Tuple[Hashable, ...]
    morphisms: Dict[Hashable, Tuple[Hashable, Hashable]]
    identities: Dict[Hashable, Hashable]
    composition: Dict[Tuple[Hashable, Hashable], Hashable]
    name: str = field(default="", compare=False)

    def source(self, f: Hashable) -> Hashable:
        return self.morphisms[f][0]

    def target(self, f: Hashable) -> Hashable:
        return self.morphisms[f][1]

    def hom(self, a: Hashable, b: Hashable) -> List[Hashable]:
        return [f for f, ends in self.morphisms.items() if ends == (a, b)]

    def compose(self, g: Hashable, f: Hashable) -> Hashable:
        """``g ∘ f``."""
        try:
            return self.composition[(g, f)]
        except KeyError:
            raise CompositionMismatchError(f"{g} ∘ {f} is not defined in {self.name or 'the category'}") from None

    def to_json(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "objects": list(self.objects),
            "morphisms": [{"id": f, "source": s, "target": t} for f, (s, t) in self.morphisms.items()],
            "identities": {str(x): f for x, f in self.identities.items()},
            "compose": [{"outer": g, "inner": f, "result": h} for (g, f), h in self.composition.items()],
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "SmallCategory":
        try:
            objects = tuple(data["objects"])
            by_name = {str(x): x for x in objects}
            return cls(
                objects=objects,
                morphisms={m["id"]: (m["source"], m["target"]) for m in data["morphisms"]},
                identities={by_name[k]: v for k, v in data["identities"].items()},
                composition={(c["outer"], c["inner"]): c["result"] for c in data["compose"]},
                name=data.get("name", ""),
            )
        except (KeyError, TypeError) as e:
            raise SerializationError(f"Malformed category: {e}") from e


def validate_category(category: SmallCategory) -> CheckResult:
    """Composition is total on composable pairs, well typed, unital and associative."""
    scope = f"{len(category.objects)} objects, {len(category.morphisms)} morphisms"
    for x in category.objects:
        unit = category.identities.get(x)
        if unit is None or category.morphisms.get(unit) != (x, x):
            return CheckResult.fail(f"object {x} has no identity", scope)
    for f, g in itertools.product(category.morphisms, repeat=2):
        composable = category.target(f) == category.source(g)
        if composable != ((g, f) in category.composition):
            return CheckResult.fail(f"composition table wrong on ({g}, {f})", scope)
        if composable:
            h = category.composition[(g, f)]
            if category.morphisms.get(h) != (category.source(f), category.target(g)):
                return CheckResult.fail(f"{g} ∘ {f} = {h} has the wrong ends", scope)
    for f in category.morphisms:
        a, b = category.morphisms[f]
        if category.compose(category.identities[b], f) != f or category.compose(f, category.identities[a]) != f:
            return CheckResult.fail(f"unit law fails on {f}", scope)
    for f, g, h in itertools.product(category.morphisms, repeat=3):
        if category.target(f) != category.source(g) or category.target(g) != category.source(h):
            continue
        left = category.compose(h, category.compose(g, f))
        if left != category.compose(category.compose(h, g), f):
            return CheckResult.fail(f"associativity fails on {f}, {g}, {h}", scope)
    return CheckResult.ok(scope)


def poset_category(elements: Sequence[Hashable], leq: Callable[[Any, Any], bool], name: str = "") -> SmallCategory:
    """One morphism a → b whenever a <= b."""
    objects = tuple(elements)
    morphisms = {f"{a}<={b}": (a, b) for a in objects for b in objects if leq(a, b)}
    composition = {}
    for f, (a, b) in morphisms.items():
        for g, (c, d) in morphisms.items():
            if b == c:
                composition[(g, f)] = f"{a}<={d}"
    return SmallCategory(
        objects=objects,
        morphisms=morphisms,
        identities={a: f"{a}<={a}" for a in objects},
        composition=composition,
        name=name or f"poset{list(objects)}",
    )


def chain_category(length: int) -> SmallCategory:
    """The linear order 0 < 1 < ... < length - 1."""
    return poset_category(range(length), lambda a, b: a <= b, name=f"chain{length}")


def finite_monoid(
    elements: Sequence[Hashable], multiply: Callable[[Any, Any], Any], unit: Hashable, name: str = ""
) -> SmallCategory:
    """A one-object category; ``multiply(g, f)`` is g ∘ f."""
    morphisms = {m: ("*", "*") for m in elements}
    composition = {(g, f): multiply(g, f) for g in elements for f in elements}
    return SmallCategory(
        objects=("*",),
        morphisms=morphisms,
        identities={"*": unit},
        composition=composition,
        name=name or "monoid",
    )


def cyclic_group(order: int) -> SmallCategory:
    elements = [f"g{k}" for k in range(order)]
    return finite_monoid(
        elements,
        lambda g, f: f"g{(int(g[1:]) + int(f[1:])) % order}",
        "g0",
        name=f"Z/{order}",
    )


def truncated_additive_monoid(bound: int) -> SmallCategory:
    """({0..bound}, +) with sums capped at ``bound``: a finite quotient of ℕ."""
    elements = [f"+{k}" for k in range(bound + 1)]
    return finite_monoid(
        elements,
        lambda g, f: f"+{min(int(g[1:]) + int(f[1:]), bound)}",
        "+0",
        name=f"N<={bound}",
    )


def discrete_category(size: int) -> SmallCategory:
    objects = tuple(f"x{k}" for k in range(size))
    return SmallCategory(
        objects=objects,
        morphisms={f"id_{x}": (x, x) for x in objects},
        identities={x: f"id_{x}" for x in objects},
        composition={(f"id_{x}", f"id_{x}"): f"id_{x}" for x in objects},
        name=f"discrete{size}",
    )


def terminal_category() -> SmallCategory:
    return discrete_category(1)
