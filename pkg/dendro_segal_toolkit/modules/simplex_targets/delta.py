"""
The simplex category Δ.

Objects are the linear orders [n] = {0 < 1 < ... < n}; a DeltaMap stores
its values on 0..m. Face and degeneracy generators follow the usual
cosimplicial conventions: ``face(n, i)`` is [n-1] → [n] skipping i and
``degeneracy(n, j)`` is [n+1] → [n] hitting j twice.
"""

import itertools
import logging
from dataclasses import dataclass
from math import comb
from typing import Any, Dict, List, Tuple

from dendro_segal_toolkit.dst_core.exceptions import (
    CompositionMismatchError,
    InvalidMorphismError,
    SerializationError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class DeltaObj:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise InvalidMorphismError(f"[{self.n}] is not an object of Δ")

    def __str__(self) -> str:
        return f"[{self.n}]"


@dataclass(frozen=True, order=True)
class DeltaMap:
    """A weakly monotone map [n_src] → [n_dst]."""

    n_src: int
    n_dst: int
    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.n_src + 1:
            raise InvalidMorphismError(
                f"A map out of [{self.n_src}] needs {self.n_src + 1} values, got {len(self.values)}"
            )
        if any(v < 0 or v > self.n_dst for v in self.values):
            raise InvalidMorphismError(f"Values {list(self.values)} leave [{self.n_dst}]")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise InvalidMorphismError(f"Values {list(self.values)} are not monotone")

    @property
    def src(self) -> DeltaObj:
        return DeltaObj(self.n_src)

    @property
    def dst(self) -> DeltaObj:
        return DeltaObj(self.n_dst)

    def __call__(self, i: int) -> int:
        return self.values[i]

    @property
    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    @property
    def is_surjective(self) -> bool:
        return set(self.values) == set(range(self.n_dst + 1))

    @property
    def is_iso(self) -> bool:
        return self.n_src == self.n_dst and self.is_injective

    def __str__(self) -> str:
        return f"[{self.n_src}]→[{self.n_dst}] {list(self.values)}"

    def to_json(self) -> Dict[str, Any]:
        return {"n_src": self.n_src, "n_dst": self.n_dst, "values": list(self.values)}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "DeltaMap":
        try:
            return cls(int(data["n_src"]), int(data["n_dst"]), tuple(int(v) for v in data["values"]))
        except (KeyError, TypeError, ValueError) as e:
            raise SerializationError(f"Malformed DeltaMap: {e}") from e


def identity_delta(n: int) -> DeltaMap:
    return DeltaMap(n, n, tuple(range(n + 1)))


def compose_delta(g: DeltaMap, f: DeltaMap) -> DeltaMap:
    """``g ∘ f``."""
    if f.n_dst != g.n_src:
        raise CompositionMismatchError(f"Cannot compose {g} after {f}")
    return DeltaMap(f.n_src, g.n_dst, tuple(g(v) for v in f.values))


def face(n: int, i: int) -> DeltaMap:
    if not 0 <= i <= n or n < 1:
        raise InvalidMorphismError(f"No face d^{i} into [{n}]")
    return DeltaMap(n - 1, n, tuple(k if k < i else k + 1 for k in range(n)))


def degeneracy(n: int, j: int) -> DeltaMap:
    if not 0 <= j <= n:
        raise InvalidMorphismError(f"No degeneracy s^{j} onto [{n}]")
    return DeltaMap(n + 1, n, tuple(k if k <= j else k - 1 for k in range(n + 2)))


def epi_mono(f: DeltaMap) -> Tuple[DeltaMap, DeltaMap]:
    """Factor ``f`` as injection ∘ surjection."""
    image = sorted(set(f.values))
    position = {v: k for k, v in enumerate(image)}
    k = len(image) - 1
    surjection = DeltaMap(f.n_src, k, tuple(position[v] for v in f.values))
    injection = DeltaMap(k, f.n_dst, tuple(image))
    return surjection, injection


def face_indices(injection: DeltaMap) -> List[int]:
    """Missed values in decreasing order: the faces to apply on the presheaf side, first to last."""
    missed = set(range(injection.n_dst + 1)) - set(injection.values)
    return sorted(missed, reverse=True)


def degeneracy_indices(surjection: DeltaMap) -> List[int]:
    """Repeated positions in increasing order: the degeneracies to apply, first to last."""
    return [j for j in range(surjection.n_src) if surjection(j) == surjection(j + 1)]


def enumerate_delta(m: int, n: int) -> List[DeltaMap]:
    """Hom_Δ([m], [n]) in lexicographic order."""
    maps = [
        DeltaMap(m, n, values)
        for values in itertools.combinations_with_replacement(range(n + 1), m + 1)
    ]
    logger.debug(f"|Hom_Δ([{m}],[{n}])| = {len(maps)}")
    return maps


def count_delta(m: int, n: int) -> int:
    return comb(m + n + 1, m + 1)
