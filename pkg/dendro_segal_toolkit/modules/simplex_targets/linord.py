"""
The category ℒ of finite linear orders and the cut duality ℒ ≅ Δ^op.

A LinOrdMap N → M is a monotone tri-partition N = N_- ⊔ N^f ⊔ N_+ together
with a weakly monotone map N^f → M. Cuts of a linear order of size m are the
m + 1 positions between and around its elements, so ``cut_dual_obj`` sends
it to [m].
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Hashable, Tuple

from dendro_segal_toolkit.dst_core.exceptions import (
    CompositionMismatchError,
    InvalidMorphismError,
    SerializationError,
)

from .delta import DeltaMap, DeltaObj

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinOrd:
    """Labels listed in increasing order."""

    labels: Tuple[Hashable, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(set(self.labels)) != len(self.labels):
            raise InvalidMorphismError(f"Repeated label in {list(self.labels)}")

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: Hashable) -> int:
        return self.labels.index(label)

    @classmethod
    def standard(cls, size: int) -> "LinOrd":
        return cls(tuple(range(size)))


@dataclass(frozen=True)
class LinOrdMap:
    """
    Stored by positions: the first ``lower`` elements of the source form N_-,
    the last ``upper`` form N_+, and ``values`` gives the target positions of
    the middle elements.
    """

    source: LinOrd
    target: LinOrd
    lower: int
    upper: int
    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.lower < 0 or self.upper < 0:
            raise InvalidMorphismError("Negative partition sizes")
        if self.lower + len(self.values) + self.upper != len(self.source):
            raise InvalidMorphismError("The tri-partition does not cover the source")
        if any(v < 0 or v >= len(self.target) for v in self.values):
            raise InvalidMorphismError(f"Values {list(self.values)} leave the target")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise InvalidMorphismError(f"Values {list(self.values)} are not monotone")

    @property
    def below(self) -> Tuple[Hashable, ...]:
        return self.source.labels[: self.lower]

    @property
    def middle(self) -> Tuple[Hashable, ...]:
        return self.source.labels[self.lower : self.lower + len(self.values)]

    @property
    def above(self) -> Tuple[Hashable, ...]:
        return self.source.labels[len(self.source) - self.upper :]

    def label_map(self) -> Dict[Hashable, Hashable]:
        return {x: self.target.labels[v] for x, v in zip(self.middle, self.values)}

    def to_json(self) -> Dict[str, Any]:
        return {
            "source": list(self.source.labels),
            "target": list(self.target.labels),
            "below": list(self.below),
            "above": list(self.above),
            "map": [[x, y] for x, y in self.label_map().items()],
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "LinOrdMap":
        try:
            source = LinOrd(tuple(data["source"]))
            target = LinOrd(tuple(data["target"]))
            below, above = list(data["below"]), list(data["above"])
            pairs = {x: y for x, y in data["map"]}
        except (KeyError, TypeError, ValueError) as e:
            raise SerializationError(f"Malformed LinOrdMap: {e}") from e
        labels = source.labels
        if tuple(below) != labels[: len(below)] or tuple(above) != labels[len(labels) - len(above) :]:
            raise InvalidMorphismError("N_- must be an initial and N_+ a final segment")
        middle = labels[len(below) : len(labels) - len(above)]
        if set(pairs) != set(middle):
            raise InvalidMorphismError("The map must be defined exactly on the middle part")
        return cls(source, target, len(below), len(above), tuple(target.index(pairs[x]) for x in middle))


def identity_linord(order: LinOrd) -> LinOrdMap:
    return LinOrdMap(order, order, 0, 0, tuple(range(len(order))))


def compose_linord(g: LinOrdMap, f: LinOrdMap) -> LinOrdMap:
    """``g ∘ f``: middle elements whose image falls in M_- or M_+ of ``g`` join N_- or N_+."""
    if f.target != g.source:
        raise CompositionMismatchError("Target of the first map is not the source of the second")
    lower, upper = f.lower, f.upper
    values = []
    g_end = g.lower + len(g.values)
    for v in f.values:
        if v < g.lower:
            lower += 1
        elif v >= g_end:
            upper += 1
        else:
            values.append(g.values[v - g.lower])
    return LinOrdMap(f.source, g.target, lower, upper, tuple(values))


def cut_dual_obj(order: LinOrd) -> DeltaObj:
    return DeltaObj(len(order))


def cut_dual_map(f: LinOrdMap) -> DeltaMap:
    """
    Contravariant: f: N → M gives [|M|] → [|N|]. Cut k of M pulls back to the
    cut of N after N_- and the middle elements landing strictly before k.
    """
    m, n = len(f.target), len(f.source)
    values = tuple(f.lower + sum(1 for v in f.values if v < k) for k in range(m + 1))
    return DeltaMap(m, n, values)


def interval_dual_map(phi: DeltaMap) -> LinOrdMap:
    """
    Inverse of ``cut_dual_map``: the interval {p, p+1} of [n] goes to the
    interval {k-1, k} of [m] with k minimal such that p < φ(k).
    """
    m, n = phi.n_src, phi.n_dst
    values = []
    for p in range(phi(0), phi(m)):
        k = next(k for k in range(m + 1) if p < phi(k))
        values.append(k - 1)
    return LinOrdMap(LinOrd.standard(n), LinOrd.standard(m), phi(0), n - phi(m), tuple(values))
