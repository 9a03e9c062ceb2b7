"""Morphisms of finite operads and isomorphism search."""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from dendro_segal_toolkit.dst_core.verdict import CheckResult

from .operad import Color, FiniteOperad, OpId, Signature

logger = logging.getLogger(__name__)


@dataclass
class OperadMorphism:
    source: FiniteOperad
    target: FiniteOperad
    colors: Dict[Color, Color]
    operations: Dict[OpId, OpId]

    def image(self, sig: Signature) -> Signature:
        return Signature(tuple(self.colors[c] for c in sig.inputs), self.colors[sig.output])

    def validate(self) -> CheckResult:
        """Colors and signatures are respected, units and composites are preserved."""
        scope = f"{self.source.name} → {self.target.name}"
        if set(self.colors) != set(self.source.colors) or set(self.operations) != set(self.source.operations):
            return CheckResult.fail("the map is not defined everywhere", scope)
        for op, sig in self.source.operations.items():
            if self.target.operations.get(self.operations[op]) != self.image(sig):
                return CheckResult.fail(f"{op!r} is sent to an operation of another signature", scope)
        for color, unit in self.source.units.items():
            if self.operations[unit] != self.target.units[self.colors[color]]:
                return CheckResult.fail(f"the unit of {color!r} is not preserved", scope)
        for (outer, inners), result in self.source.composition.items():
            mapped = self.target.compose(self.operations[outer], [self.operations[i] for i in inners])
            if mapped != self.operations[result]:
                return CheckResult.fail(f"γ({outer!r}; {list(inners)!r}) is not preserved", scope)
        return CheckResult.ok(scope)

    @property
    def is_bijective(self) -> bool:
        return (
            len(set(self.colors.values())) == len(self.target.colors) == len(self.colors)
            and len(set(self.operations.values())) == len(self.target.operations) == len(self.operations)
        )

    def is_isomorphism(self) -> bool:
        return self.is_bijective and bool(self.validate())


def _arity_profile(operad: FiniteOperad) -> Counter:
    return Counter(sig.arity for sig in operad.operations.values())


def _signature_profile(operad: FiniteOperad, colors: Dict[Color, Color]) -> Counter:
    return Counter(
        Signature(tuple(colors[c] for c in sig.inputs), colors[sig.output]) for sig in operad.operations.values()
    )


def find_operad_isomorphism(
    source: FiniteOperad, target: FiniteOperad, hint: Optional[OperadMorphism] = None
) -> Optional[OperadMorphism]:
    """
    An isomorphism source → target, or None.

    A candidate in ``hint`` is verified first. Otherwise every color
    bijection with matching signature counts is tried, and operations are
    assigned by backtracking with the composition table checked as soon as
    an entry is fully assigned.
    """
    if hint is not None and hint.is_isomorphism():
        return hint
    if (
        len(source.colors) != len(target.colors)
        or source.arity_bound != target.arity_bound
        or _arity_profile(source) != _arity_profile(target)
    ):
        return None
    target_profile = Counter(target.operations.values())
    order = sorted(source.operations, key=lambda op: (source.arity(op), repr(op)))
    position = {op: k for k, op in enumerate(order)}
    # each table entry is checked once its last operation (in ``order``) is assigned
    entries: Dict[OpId, List[Tuple[OpId, Tuple[OpId, ...], OpId]]] = {op: [] for op in order}
    for (outer, inners), result in source.composition.items():
        last = max((outer, result) + inners, key=position.__getitem__)
        entries[last].append((outer, inners, result))

    for perm in itertools.permutations(target.colors):
        colors = dict(zip(source.colors, perm))
        if _signature_profile(source, colors) != target_profile:
            continue
        found = _assign_operations(source, target, colors, order, entries)
        if found is not None:
            morphism = OperadMorphism(source, target, colors, found)
            logger.debug(f"Isomorphism {source.name} → {target.name} found")
            return morphism
    return None


def _assign_operations(source, target, colors, order, entries) -> Optional[Dict[OpId, OpId]]:
    assignment: Dict[OpId, OpId] = {}
    used = set()
    forced = {source.units[c]: target.units[colors[c]] for c in source.colors}

    def consistent(op: OpId) -> bool:
        for outer, inners, result in entries[op]:
            composite = target.composition.get((assignment[outer], tuple(assignment[i] for i in inners)))
            if composite != assignment[result]:
                return False
        return True

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        op = order[k]
        sig = source.operations[op]
        image = Signature(tuple(colors[c] for c in sig.inputs), colors[sig.output])
        candidates = [forced[op]] if op in forced else target.by_signature.get(image, [])
        for candidate in candidates:
            if candidate in used:
                continue
            assignment[op] = candidate
            used.add(candidate)
            if consistent(op) and extend(k + 1):
                return True
            used.discard(candidate)
            del assignment[op]
        return False

    return dict(assignment) if extend(0) else None
