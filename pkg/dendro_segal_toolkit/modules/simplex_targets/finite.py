"""
Finite pointed sets and finite nonempty sets.

Maps are stored as the set functions they are; the localization functors
land in the opposite categories, so a tree morphism T → S gives a function
L(S) → L(T). A pointed set of size k + 1 is {0, 1, ..., k} with basepoint 0.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Tuple

from dendro_segal_toolkit.dst_core.exceptions import (
    CompositionMismatchError,
    InvalidMorphismError,
    SerializationError,
)

from .cyclic import CycMap
from .delta import DeltaMap
from .linord import LinOrd, interval_dual_map

logger = logging.getLogger(__name__)

BASEPOINT = 0


@dataclass(frozen=True, order=True)
class FinMap:
    """A function {0..src-1} → {0..dst-1} between nonempty sets."""

    src: int
    dst: int
    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.src < 1 or self.dst < 1:
            raise InvalidMorphismError("Finite sets must be nonempty")
        if len(self.values) != self.src or any(not 0 <= v < self.dst for v in self.values):
            raise InvalidMorphismError(f"{list(self.values)} is not a function into {self.dst} elements")

    def __call__(self, x: int) -> int:
        return self.values[x]

    @property
    def is_bijection(self) -> bool:
        return self.src == self.dst and len(set(self.values)) == self.src

    def to_json(self) -> Dict[str, Any]:
        return {"src": self.src, "dst": self.dst, "values": list(self.values)}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "FinMap":
        try:
            return cls(int(data["src"]), int(data["dst"]), tuple(int(v) for v in data["values"]))
        except (KeyError, TypeError, ValueError) as e:
            raise SerializationError(f"Malformed map of finite sets: {e}") from e


@dataclass(frozen=True, order=True)
class PointedMap(FinMap):
    """A basepoint-preserving function; index 0 is the basepoint on both sides."""

    def __post_init__(self):
        super().__post_init__()
        if self.values[BASEPOINT] != BASEPOINT:
            raise InvalidMorphismError("A pointed map must send the basepoint to the basepoint")


def identity_fin(size: int) -> FinMap:
    return FinMap(size, size, tuple(range(size)))


def identity_pointed(size: int) -> PointedMap:
    return PointedMap(size, size, tuple(range(size)))


def _compose(g: FinMap, f: FinMap, cls):
    if f.dst != g.src:
        raise CompositionMismatchError("Cannot compose maps of finite sets of different sizes")
    return cls(f.src, g.dst, tuple(g(v) for v in f.values))


def compose_fin(g: FinMap, f: FinMap) -> FinMap:
    """``g ∘ f`` as set functions."""
    return _compose(g, f, FinMap)


def compose_pointed(g: PointedMap, f: PointedMap) -> PointedMap:
    return _compose(g, f, PointedMap)


def constant_pointed(src: int, dst: int) -> PointedMap:
    return PointedMap(src, dst, (BASEPOINT,) * src)


def linord_to_pointed(order: LinOrd) -> int:
    """Forget the order and add a basepoint: the size of the pointed set."""
    return len(order) + 1


def delta_to_pointed(f: DeltaMap) -> PointedMap:
    """
    Δ → Fin_*^op. The interval {p, p+1} of [n] is the element p + 1 of the
    pointed set; intervals in the outer parts of the tri-partition go to the
    basepoint.
    """
    dual = interval_dual_map(f)
    values = [BASEPOINT] * (f.n_dst + 1)
    for offset, v in enumerate(dual.values):
        values[dual.lower + offset + 1] = v + 1
    return PointedMap(f.n_dst + 1, f.n_src + 1, tuple(values))


def lambda_to_fin(f: CycMap) -> FinMap:
    """
    Λ → Fin_ne^op. The interval {j, j+1} of the target goes to the interval
    of the source containing its preimage: j ↦ max{i : φ(i) <= j} mod m + 1.
    """
    return FinMap(f.n + 1, f.m + 1, tuple(f.right_adjoint(j) % (f.m + 1) for j in range(f.n + 1)))
