"""
Roundtrip certificates for the equivalence.

A certificate records the constructed value, the bijections witnessing the
roundtrip and the uniqueness checks made on the way. It is truthy iff
every recorded bijection was verified.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from dendro_segal_toolkit.dst_core.exceptions import DSTError
from dendro_segal_toolkit.modules.operads import (
    FiniteOperad,
    OperadMorphism,
    find_operad_isomorphism,
    is_invertible_operad,
    validate_operad,
)
from dendro_segal_toolkit.modules.presheaves import (
    TruncatedSimplicialSet,
    check_2segal,
    encode_label,
    validate_presheaf,
)

from .construct import operad_to_simplicial, simplicial_to_operad

logger = logging.getLogger(__name__)

LevelMaps = Dict[int, Dict[Any, Any]]


@dataclass
class EquivalenceCertificate:
    direction: str
    value: Any = None
    bijections: Dict[str, Dict[Any, Any]] = field(default_factory=dict)
    log: List[str] = field(default_factory=list)
    verified: bool = False
    counterexample: Optional[str] = None

    def __bool__(self) -> bool:
        return self.verified

    def fail(self, counterexample: str) -> "EquivalenceCertificate":
        logger.warning(f"{self.direction}: {counterexample}")
        self.verified = False
        self.counterexample = counterexample
        return self

    def to_json(self) -> Dict[str, Any]:
        return {
            "direction": self.direction,
            "verified": self.verified,
            "counterexample": self.counterexample,
            "value": self.value.to_json() if hasattr(self.value, "to_json") else self.value,
            "bijections": {
                name: [[encode_label(a), encode_label(b)] for a, b in mapping.items()]
                for name, mapping in self.bijections.items()
            },
            "log": list(self.log),
        }


def is_simplicial_isomorphism(X: TruncatedSimplicialSet, Y: TruncatedSimplicialSet, maps: LevelMaps) -> Optional[str]:
    """None if ``maps`` is a levelwise bijection commuting with every face and degeneracy."""
    if X.truncation != Y.truncation:
        return f"truncations {X.truncation} and {Y.truncation} differ"
    for n in range(X.truncation + 1):
        level = maps.get(n, {})
        if set(level) != set(X.level(n)) or set(level.values()) != set(Y.level(n)) or len(Y.level(n)) != len(level):
            return f"level {n} is not a bijection"
    for (n, i), table in X.faces.items():
        for x, y in table.items():
            if Y.faces[(n, i)][maps[n][x]] != maps[n - 1][y]:
                return f"d_{i} does not commute at {x!r} in level {n}"
    for (n, j), table in X.degeneracies.items():
        for x, y in table.items():
            if Y.degeneracies[(n, j)][maps[n][x]] != maps[n + 1][y]:
                return f"s_{j} does not commute at {x!r} in level {n}"
    return None


def find_simplicial_isomorphism(
    X: TruncatedSimplicialSet, Y: TruncatedSimplicialSet, hint: Optional[LevelMaps] = None
) -> Optional[LevelMaps]:
    """
    A levelwise isomorphism X → Y, or None.

    The candidate in ``hint`` is verified first; otherwise simplices are
    assigned level by level from the bottom, each candidate required to have
    the already assigned faces and to be the degeneracy of the images below.
    """
    if hint is not None and is_simplicial_isomorphism(X, Y, hint) is None:
        return hint
    if X.truncation != Y.truncation or X.sizes() != Y.sizes():
        return None
    order = [(n, x) for n in range(X.truncation + 1) for x in X.level(n)]
    maps: LevelMaps = {n: {} for n in range(X.truncation + 1)}
    used: Dict[int, set] = {n: set() for n in range(X.truncation + 1)}

    def candidates(n: int, x) -> List:
        pool = [y for y in Y.level(n) if y not in used[n]]
        if n == 0:
            return pool
        for j in range(n):
            for z in X.level(n - 1):
                if X.degeneracies[(n - 1, j)][z] == x:
                    forced = Y.degeneracies[(n - 1, j)][maps[n - 1][z]]
                    return [forced] if forced in pool else []
        faces = [(i, maps[n - 1][X.faces[(n, i)][x]]) for i in range(n + 1)]
        return [y for y in pool if all(Y.faces[(n, i)][y] == image for i, image in faces)]

    def extend(k: int) -> bool:
        if k == len(order):
            return is_simplicial_isomorphism(X, Y, maps) is None
        n, x = order[k]
        for y in candidates(n, x):
            maps[n][x] = y
            used[n].add(y)
            if extend(k + 1):
                return True
            used[n].discard(y)
            del maps[n][x]
        return False

    return {n: dict(level) for n, level in maps.items()} if extend(0) else None


def roundtrip_operad(operad: FiniteOperad) -> EquivalenceCertificate:
    """simplicial_to_operad(operad_to_simplicial(O)) ≅ O, with the bijections found."""
    certificate = EquivalenceCertificate("operad→simplicial→operad")
    try:
        X = operad_to_simplicial(operad)
        for label, result in (("validate_presheaf", validate_presheaf(X)), ("check_2segal", check_2segal(X))):
            certificate.log.append(f"{label}({X.name}): {bool(result)}")
            if not result:
                return certificate.fail(f"{label} fails on {X.name}: {result.counterexample}")
        back = simplicial_to_operad(X, certificate.log)
    except DSTError as e:
        return certificate.fail(str(e))
    certificate.value = back
    valid = validate_operad(back)
    if not valid:
        return certificate.fail(f"{back.name} is not an operad: {valid.counterexample}")
    hint = OperadMorphism(
        operad,
        back,
        {c: (op,) for c, op in operad.units.items()},
        {op: (sig.arity, (op,)) for op, sig in operad.operations.items()},
    )
    iso = find_operad_isomorphism(operad, back, hint)
    if iso is None:
        return certificate.fail(f"no isomorphism {operad.name} → {back.name}")
    certificate.bijections = {"colors": iso.colors, "operations": iso.operations}
    certificate.verified = True
    return certificate


def roundtrip_simplicial(X: TruncatedSimplicialSet) -> EquivalenceCertificate:
    """operad_to_simplicial(simplicial_to_operad(X)) ≅ X levelwise."""
    certificate = EquivalenceCertificate("simplicial→operad→simplicial")
    try:
        operad = simplicial_to_operad(X, certificate.log)
        valid, invertible = validate_operad(operad), is_invertible_operad(operad)
        certificate.log.append(f"validate_operad({operad.name}): {bool(valid)}")
        certificate.log.append(f"is_invertible_operad({operad.name}): {bool(invertible)}")
        if not valid:
            return certificate.fail(f"{operad.name} is not an operad: {valid.counterexample}")
        if not invertible:
            return certificate.fail(f"{operad.name} is not invertible: {invertible.counterexample}")
        back = operad_to_simplicial(operad, X.truncation)
    except DSTError as e:
        return certificate.fail(str(e))
    certificate.value = back
    hint = {n: {x: ((n, x),) for x in X.level(n)} for n in range(X.truncation + 1)}
    maps = find_simplicial_isomorphism(X, back, hint)
    if maps is None:
        return certificate.fail(f"no levelwise isomorphism {X.name} → {back.name}")
    certificate.bijections = {f"level {n}": level for n, level in maps.items()}
    certificate.verified = True
    return certificate


def certify_operad(X: TruncatedSimplicialSet) -> EquivalenceCertificate:
    """simplicial_to_operad with its uniqueness log and validation."""
    certificate = EquivalenceCertificate("simplicial→operad")
    try:
        operad = simplicial_to_operad(X, certificate.log)
    except DSTError as e:
        return certificate.fail(str(e))
    certificate.value = operad
    for check in (validate_operad, is_invertible_operad):
        result = check(operad)
        if not result:
            return certificate.fail(f"{check.__name__}: {result.counterexample}")
    certificate.verified = True
    return certificate


def certify_simplicial(operad: FiniteOperad, truncation: Optional[int] = None) -> EquivalenceCertificate:
    """operad_to_simplicial with the simplicial identities and the 2-Segal condition verified."""
    certificate = EquivalenceCertificate("operad→simplicial")
    try:
        X = operad_to_simplicial(operad, truncation)
    except DSTError as e:
        return certificate.fail(str(e))
    certificate.value = X
    for check in (validate_presheaf, check_2segal):
        result = check(X)
        certificate.log.append(f"{check.__name__}: {bool(result)}")
        if not result:
            return certificate.fail(f"{check.__name__}: {result.counterexample}")
    certificate.verified = True
    return certificate
