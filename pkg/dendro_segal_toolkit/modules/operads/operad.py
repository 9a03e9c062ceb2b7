"""
Finite colored non-symmetric operads given by tables.

Operations are opaque labels with a stored signature. The composition
table is keyed by (outer, inners) and is defined exactly for composable
instances whose composite arity stays within the arity bound.
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Hashable, Iterator, List, Optional, Sequence, Tuple

from dendro_segal_toolkit.dst_core.exceptions import ArityBoundError, OperadError, SerializationError
from dendro_segal_toolkit.dst_core.verdict import CheckResult
from dendro_segal_toolkit.modules.presheaves import SmallCategory, decode_label, encode_label

logger = logging.getLogger(__name__)

Color = Hashable
OpId = Hashable


@dataclass(frozen=True)
class Signature:
    inputs: Tuple[Color, ...]
    output: Color

    @property
    def arity(self) -> int:
        return len(self.inputs)


@dataclass
class FiniteOperad:
    colors: Tuple[Color, ...]
    arity_bound: int
    operations: Dict[OpId, Signature]
    units: Dict[Color, OpId]
    composition: Dict[Tuple[OpId, Tuple[OpId, ...]], OpId]
    name: str = field(default="", compare=False)

    @cached_property
    def by_output(self) -> Dict[Tuple[Color, int], List[OpId]]:
        """Operations grouped by (output color, arity)."""
        index: Dict[Tuple[Color, int], List[OpId]] = {}
        for op, sig in self.operations.items():
            index.setdefault((sig.output, sig.arity), []).append(op)
        return index

    @cached_property
    def by_signature(self) -> Dict[Signature, List[OpId]]:
        index: Dict[Signature, List[OpId]] = {}
        for op, sig in self.operations.items():
            index.setdefault(sig, []).append(op)
        return index

    def signature(self, op: OpId) -> Signature:
        return self.operations[op]

    def arity(self, op: OpId) -> int:
        return self.operations[op].arity

    def ops(self, inputs: Sequence[Color], output: Color) -> List[OpId]:
        return self.by_signature.get(Signature(tuple(inputs), output), [])

    def ops_into(self, output: Color, max_arity: Optional[int] = None) -> List[OpId]:
        bound = self.arity_bound if max_arity is None else max_arity
        return [op for n in range(bound + 1) for op in self.by_output.get((output, n), [])]

    def compose(self, outer: OpId, inners: Sequence[OpId]) -> OpId:
        """γ(outer; inners)."""
        inners = tuple(inners)
        total = sum(self.arity(op) for op in inners)
        if total > self.arity_bound:
            raise ArityBoundError(f"Composite of arity {total} exceeds the bound {self.arity_bound}")
        try:
            return self.composition[(outer, inners)]
        except KeyError:
            raise OperadError(f"γ({outer!r}; {list(inners)!r}) is not in the table of {self.name or 'the operad'}") from None

    def to_json(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "colors": [encode_label(c) for c in self.colors],
            "arity_bound": self.arity_bound,
            "ops": [
                {
                    "id": encode_label(op),
                    "inputs": [encode_label(c) for c in sig.inputs],
                    "output": encode_label(sig.output),
                }
                for op, sig in self.operations.items()
            ],
            "units": (
                {c: encode_label(op) for c, op in self.units.items()}
                if all(isinstance(c, str) for c in self.units)
                else [{"color": encode_label(c), "op": encode_label(op)} for c, op in self.units.items()]
            ),
            "compose": [
                {"outer": encode_label(outer), "inners": [encode_label(i) for i in inners], "result": encode_label(result)}
                for (outer, inners), result in self.composition.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "FiniteOperad":
        """``units`` is a {color: op-id} object, or a list of {"color", "op"} pairs for non-string colors."""
        try:
            units_data = data["units"]
            if isinstance(units_data, dict):
                units = {decode_label(c): decode_label(op) for c, op in units_data.items()}
            else:
                units = {decode_label(u["color"]): decode_label(u["op"]) for u in units_data}
            return cls(
                colors=tuple(decode_label(c) for c in data["colors"]),
                arity_bound=int(data["arity_bound"]),
                operations={
                    decode_label(op["id"]): Signature(
                        tuple(decode_label(c) for c in op["inputs"]), decode_label(op["output"])
                    )
                    for op in data["ops"]
                },
                units=units,
                composition={
                    (decode_label(c["outer"]), tuple(decode_label(i) for i in c["inners"])): decode_label(c["result"])
                    for c in data["compose"]
                },
                name=data.get("name", ""),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise SerializationError(f"Malformed operad: {e}") from e


def inner_tuples(operad: FiniteOperad, slots: Sequence[Color], budget: int) -> Iterator[Tuple[OpId, ...]]:
    """Tuples of operations with the given outputs whose arities sum to at most ``budget``."""
    if not slots:
        yield ()
        return
    head, rest = slots[0], slots[1:]
    for op in operad.ops_into(head, budget):
        for tail in inner_tuples(operad, rest, budget - operad.arity(op)):
            yield (op,) + tail


def composable_instances(operad: FiniteOperad) -> Iterator[Tuple[OpId, Tuple[OpId, ...]]]:
    """Every (outer, inners) with matching colors and composite arity within the bound."""
    for outer, sig in operad.operations.items():
        for inners in inner_tuples(operad, sig.inputs, operad.arity_bound):
            yield outer, inners


def composite_signature(operad: FiniteOperad, outer: OpId, inners: Sequence[OpId]) -> Signature:
    inputs = tuple(c for op in inners for c in operad.signature(op).inputs)
    return Signature(inputs, operad.signature(outer).output)


def validate_operad(operad: FiniteOperad) -> CheckResult:
    """Typed units, a total well-typed table, unitality and associativity within the bound."""
    scope = f"{len(operad.colors)} colors, arity<={operad.arity_bound}"
    for color in operad.colors:
        unit = operad.units.get(color)
        if unit is None or operad.operations.get(unit) != Signature((color,), color):
            return CheckResult.fail(f"color {color!r} has no well-typed unit", scope)
    for op, sig in operad.operations.items():
        if sig.arity > operad.arity_bound:
            return CheckResult.fail(f"{op!r} has arity {sig.arity} beyond the bound", scope)
        if sig.output not in operad.colors or any(c not in operad.colors for c in sig.inputs):
            return CheckResult.fail(f"{op!r} uses an unknown color", scope)
    instances = list(composable_instances(operad))
    if len(instances) != len(operad.composition):
        return CheckResult.fail(
            f"the table has {len(operad.composition)} entries for {len(instances)} composable instances", scope
        )
    for outer, inners in instances:
        result = operad.composition.get((outer, inners))
        if result is None:
            return CheckResult.fail(f"γ({outer!r}; {list(inners)!r}) is missing", scope)
        if operad.operations.get(result) != composite_signature(operad, outer, inners):
            return CheckResult.fail(f"γ({outer!r}; {list(inners)!r}) = {result!r} has the wrong signature", scope)
    for op, sig in operad.operations.items():
        if operad.compose(operad.units[sig.output], (op,)) != op:
            return CheckResult.fail(f"left unit law fails on {op!r}", scope)
        if operad.compose(op, tuple(operad.units[c] for c in sig.inputs)) != op:
            return CheckResult.fail(f"right unit law fails on {op!r}", scope)
    for outer, inners in instances:
        middle = composite_signature(operad, outer, inners).inputs
        for tops in inner_tuples(operad, middle, operad.arity_bound):
            left = operad.compose(operad.compose(outer, inners), tops)
            grouped, start = [], 0
            for op in inners:
                n = operad.arity(op)
                grouped.append(operad.compose(op, tops[start : start + n]))
                start += n
            if left != operad.compose(outer, grouped):
                return CheckResult.fail(f"associativity fails on {outer!r}, {list(inners)!r}, {list(tops)!r}", scope)
    return CheckResult.ok(scope)


def _terminal_tables(colors: Sequence[Color], arity_bound: int, arities: Sequence[int]):
    operations = {}
    for n in arities:
        for inputs in itertools.product(colors, repeat=n):
            for output in colors:
                operations[(inputs, output)] = Signature(tuple(inputs), output)
    composition = {}
    operad = FiniteOperad(tuple(colors), arity_bound, operations, {c: ((c,), c) for c in colors}, composition)
    for outer, inners in composable_instances(operad):
        sig = composite_signature(operad, outer, inners)
        composition[(outer, inners)] = (sig.inputs, sig.output)
    return operations, composition


def terminal_operad(arity_bound: int, colors: Sequence[Color] = ("*",), nullary: bool = True) -> FiniteOperad:
    """Exactly one operation per signature; with ``nullary=False`` there are no constants."""
    arities = range(0 if nullary else 1, arity_bound + 1)
    operations, composition = _terminal_tables(colors, arity_bound, arities)
    name = "terminal" if len(colors) == 1 else f"terminal{list(colors)}"
    return FiniteOperad(
        tuple(colors),
        arity_bound,
        operations,
        {c: ((c,), c) for c in colors},
        composition,
        name=name if nullary else f"{name} without constants",
    )


def operad_of_category(category: SmallCategory, arity_bound: int) -> FiniteOperad:
    """The category as an operad with only unary operations."""
    operations = {f: Signature((s,), t) for f, (s, t) in category.morphisms.items()}
    composition = {(g, (f,)): h for (g, f), h in category.composition.items()}
    return FiniteOperad(
        tuple(category.objects),
        arity_bound,
        operations,
        dict(category.identities),
        composition,
        name=f"Op({category.name})",
    )


def operad_of_chains(category: SmallCategory, arity_bound: int) -> FiniteOperad:
    """
    Colors are the morphisms of the category. An n-ary operation is a
    composable chain ("chain", f_1, ..., f_n) whose output is f_n ∘ ... ∘ f_1;
    the nullary operations ("obj", a) have output the identity of a.
    Composition concatenates chains. This operad is invertible.
    """
    operations: Dict[OpId, Signature] = {
        ("obj", a): Signature((), category.identities[a]) for a in category.objects
    }

    def composite(chain: Tuple[Hashable, ...]) -> Hashable:
        result = chain[0]
        for f in chain[1:]:
            result = category.compose(f, result)
        return result

    chains = [(f,) for f in category.morphisms]
    for _ in range(arity_bound):
        for chain in chains:
            operations[("chain",) + chain] = Signature(chain, composite(chain))
        chains = [c + (g,) for c in chains for g in category.morphisms if category.source(g) == category.target(c[-1])]
    units = {f: ("chain", f) for f in category.morphisms}
    operad = FiniteOperad(tuple(category.morphisms), arity_bound, operations, units, {}, name=f"Chains({category.name})")

    for outer, inners in composable_instances(operad):
        flat = tuple(f for op in inners if op[0] == "chain" for f in op[1:])
        if flat:
            operad.composition[(outer, inners)] = ("chain",) + flat
        elif outer[0] == "obj":
            operad.composition[(outer, inners)] = outer
        else:
            # all inputs are identities, so the result is the object the chain starts at
            operad.composition[(outer, inners)] = ("obj", category.source(outer[1]))
    return operad


def relabel(operad: FiniteOperad, rename: Dict[OpId, OpId], name: str = "") -> FiniteOperad:
    """The same operad with operation labels replaced through ``rename``."""
    return FiniteOperad(
        operad.colors,
        operad.arity_bound,
        {rename[op]: sig for op, sig in operad.operations.items()},
        {c: rename[op] for c, op in operad.units.items()},
        {(rename[o], tuple(rename[i] for i in inners)): rename[r] for (o, inners), r in operad.composition.items()},
        name=name or operad.name,
    )


def corrupt_composition(operad: FiniteOperad) -> FiniteOperad:
    """Swap the result of one composite for another operation of the same signature, if any."""
    table = dict(operad.composition)
    for key, result in table.items():
        rivals = [op for op in operad.by_signature[operad.signature(result)] if op != result]
        if rivals and key[0] not in operad.units.values():
            table[key] = rivals[0]
            break
    else:
        raise OperadError(f"{operad.name} has no composite that can be corrupted")
    return FiniteOperad(
        operad.colors, operad.arity_bound, operad.operations, operad.units, table, name=f"{operad.name} corrupted"
    )
