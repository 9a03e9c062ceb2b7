"""
Connes' cyclic category Λ.

A CycMap [m] → [n] is a weakly monotone integer function φ with
φ(i + m + 1) = φ(i) + n + 1, stored by its values on 0..m for the unique
representative with φ(0) in 0..n. Representatives differing by a multiple
of n + 1 describe the same map of circles.
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

from .delta import DeltaMap

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CycObj:
    """The circle with n + 1 marked points."""

    n: int

    def __str__(self) -> str:
        return f"⟨{self.n}⟩"


@dataclass(frozen=True, order=True)
class CycMap:
    m: int
    n: int
    phi: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "phi", tuple(self.phi))
        if len(self.phi) != self.m + 1:
            raise InvalidMorphismError(f"A cyclic map out of [{self.m}] needs {self.m + 1} values")
        if not 0 <= self.phi[0] <= self.n:
            raise InvalidMorphismError(f"φ(0) = {self.phi[0]} is not normalized into 0..{self.n}")
        if any(a > b for a, b in zip(self.phi, self.phi[1:])):
            raise InvalidMorphismError(f"Values {list(self.phi)} are not monotone")
        if self.phi[-1] > self.phi[0] + self.n + 1:
            raise InvalidMorphismError(f"Values {list(self.phi)} wind around more than once")

    @classmethod
    def normalized(cls, m: int, n: int, values) -> "CycMap":
        """Shift an arbitrary representative so that φ(0) lands in 0..n."""
        values = tuple(values)
        shift = (values[0] // (n + 1)) * (n + 1)
        return cls(m, n, tuple(v - shift for v in values))

    def __call__(self, i: int) -> int:
        """The representative, extended to all integers."""
        q, r = divmod(i, self.m + 1)
        return self.phi[r] + q * (self.n + 1)

    def right_adjoint(self, t: int) -> int:
        """max{i : φ(i) <= t}, the right adjoint of φ."""
        i = 0
        while self(i) > t:
            i -= self.m + 1
        while self(i + 1) <= t:
            i += 1
        return i

    @property
    def is_iso(self) -> bool:
        return self.m == self.n and len(set(self.phi)) == len(self.phi) and self.phi[-1] < self.phi[0] + self.n + 1

    def __str__(self) -> str:
        return f"⟨{self.m}⟩→⟨{self.n}⟩ {list(self.phi)}"

    def to_json(self) -> Dict[str, Any]:
        return {"m": self.m, "n": self.n, "phi0_to_phim": list(self.phi)}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "CycMap":
        try:
            return cls.normalized(int(data["m"]), int(data["n"]), [int(v) for v in data["phi0_to_phim"]])
        except (KeyError, TypeError, ValueError, IndexError) as e:
            raise SerializationError(f"Malformed CycMap: {e}") from e


def identity_lambda(n: int) -> CycMap:
    return CycMap(n, n, tuple(range(n + 1)))


def rotation(n: int, k: int = 1) -> CycMap:
    """The automorphism i ↦ i + k of [n]."""
    return CycMap.normalized(n, n, [i + k for i in range(n + 1)])


def compose_lambda(g: CycMap, f: CycMap) -> CycMap:
    """``g ∘ f``."""
    if f.n != g.m:
        raise CompositionMismatchError(f"Cannot compose {g} after {f}")
    return CycMap.normalized(f.m, g.n, [g(f(i)) for i in range(f.m + 1)])


def lambda_dual(f: CycMap) -> CycMap:
    """
    Self-duality of Λ: point j of the dual circle is the arc from point j to j + 1.

    The bare interchange j ↦ max{i : φ(i) <= j} is contravariant, but applied
    twice it gives i ↦ φ(i + 1) - 1, which is φ conjugated by a rotation.
    Reading the dual circle backwards, E(φ)(j) = -max{i : φ(i) <= -j}, cancels
    that rotation, so E(E(φ)) = φ on the nose.
    """
    return CycMap.normalized(
        f.n, f.m, [-f.right_adjoint(-j) for j in range(f.n + 1)]
    )


def reverse_orientation(f: CycMap) -> CycMap:
    """R(φ)(j) = -φ(-j): the same map with both circles read counterclockwise."""
    return CycMap.normalized(f.m, f.n, [-f(-j) for j in range(f.m + 1)])


def delta_to_lambda(f: DeltaMap) -> CycMap:
    return CycMap(f.n_src, f.n_dst, f.values)


def lambda_to_delta(f: CycMap) -> DeltaMap:
    """Inverse of ``delta_to_lambda`` on maps fixing the basepoint interval."""
    if f.phi[-1] > f.n:
        raise InvalidMorphismError(f"{f} does not come from Δ")
    return DeltaMap(f.m, f.n, f.phi)


def enumerate_lambda(m: int, n: int) -> List[CycMap]:
    maps = [
        CycMap(m, n, (start,) + tail)
        for start in range(n + 1)
        for tail in itertools.combinations_with_replacement(range(start, start + n + 2), m)
    ]
    logger.debug(f"|Hom_Λ([{m}],[{n}])| = {len(maps)}")
    return maps


def count_lambda(m: int, n: int) -> int:
    return (m + 1) * comb(m + n + 1, m + 1)
