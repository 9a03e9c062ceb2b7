"""
Truncated simplicial sets.

A TruncatedSimplicialSet stores levels X_0..X_N and the tables of the
generating operators: ``faces[(n, i)]`` is d_i: X_n → X_{n-1} and
``degeneracies[(n, j)]`` is s_j: X_n → X_{n+1}. The action of an arbitrary
DeltaMap is computed from its epi-mono factorization, so functoriality is a
property of the tables and is validated, not assumed.

Simplices are labelled by hashable values; tuples are written to JSON as
lists and read back as tuples.
"""

import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from dendro_segal_toolkit.dst_core.exceptions import PresheafError, SerializationError, TruncationError
from dendro_segal_toolkit.dst_core.verdict import CheckResult
from dendro_segal_toolkit.modules.simplex_targets import (
    DeltaMap,
    compose_delta,
    degeneracy,
    degeneracy_indices,
    enumerate_delta,
    epi_mono,
    face,
    face_indices,
)

from .category import SmallCategory

logger = logging.getLogger(__name__)

Label = Hashable
Table = Dict[Tuple[int, int], Dict[Label, Label]]


def encode_label(label: Label) -> Any:
    if isinstance(label, tuple):
        return [encode_label(part) for part in label]
    return label


def decode_label(data: Any) -> Label:
    if isinstance(data, list):
        return tuple(decode_label(part) for part in data)
    return data


@dataclass
class TruncatedSimplicialSet:
    truncation: int
    levels: Tuple[Tuple[Label, ...], ...]
    faces: Table
    degeneracies: Table
    name: str = field(default="", compare=False)

    def level(self, n: int) -> Tuple[Label, ...]:
        if not 0 <= n <= self.truncation:
            raise TruncationError(f"Level {n} lies outside the truncation {self.truncation}")
        return self.levels[n]

    def sizes(self) -> List[int]:
        return [len(level) for level in self.levels]

    def face(self, n: int, i: int, x: Label) -> Label:
        return self.faces[(n, i)][x]

    def degeneracy(self, n: int, j: int, x: Label) -> Label:
        return self.degeneracies[(n, j)][x]

    def act(self, f: DeltaMap, x: Label) -> Label:
        """X(f)(x) for f: [m] → [n] and x ∈ X_n."""
        if max(f.n_src, f.n_dst) > self.truncation:
            raise TruncationError(f"{f} leaves the truncation {self.truncation}")
        surjection, injection = epi_mono(f)
        n = injection.n_dst
        for i in face_indices(injection):
            x = self.faces[(n, i)][x]
            n -= 1
        for j in degeneracy_indices(surjection):
            x = self.degeneracies[(n, j)][x]
            n += 1
        return x

    def restrict(self, x: Label, n: int, vertices: Sequence[int]) -> Label:
        """Restriction of x ∈ X_n along the monotone list of vertices."""
        return self.act(DeltaMap(len(vertices) - 1, n, tuple(vertices)), x)

    def to_json(self) -> Dict[str, Any]:
        def table(entries: Table) -> List[Dict[str, Any]]:
            return [
                {
                    "level": n,
                    "index": i,
                    "values": [encode_label(entries[(n, i)][x]) for x in self.levels[n]],
                }
                for (n, i) in sorted(entries)
            ]

        return {
            "name": self.name,
            "truncation": self.truncation,
            "levels": [[encode_label(x) for x in level] for level in self.levels],
            "faces": table(self.faces),
            "degeneracies": table(self.degeneracies),
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "TruncatedSimplicialSet":
        try:
            levels = tuple(tuple(decode_label(x) for x in level) for level in data["levels"])

            def table(entries) -> Table:
                result: Table = {}
                for entry in entries:
                    n, i = int(entry["level"]), int(entry["index"])
                    values = [decode_label(v) for v in entry["values"]]
                    if len(values) != len(levels[n]):
                        raise SerializationError(f"Table ({n}, {i}) does not cover level {n}")
                    result[(n, i)] = dict(zip(levels[n], values))
                return result

            return cls(
                truncation=int(data["truncation"]),
                levels=levels,
                faces=table(data["faces"]),
                degeneracies=table(data["degeneracies"]),
                name=data.get("name", ""),
            )
        except (KeyError, TypeError, ValueError, IndexError) as e:
            raise SerializationError(f"Malformed simplicial set: {e}") from e

    @classmethod
    def from_action(
        cls,
        truncation: int,
        levels: Sequence[Sequence[Label]],
        act: Callable[[DeltaMap, Label], Label],
        name: str = "",
    ) -> "TruncatedSimplicialSet":
        """Tabulate the generators of an action given on arbitrary maps."""
        levels = tuple(tuple(level) for level in levels)
        if len(levels) != truncation + 1:
            raise PresheafError(f"Expected {truncation + 1} levels, got {len(levels)}")
        faces = {
            (n, i): {x: act(face(n, i), x) for x in levels[n]}
            for n in range(1, truncation + 1)
            for i in range(n + 1)
        }
        degeneracies = {
            (n, j): {x: act(degeneracy(n, j), x) for x in levels[n]}
            for n in range(truncation)
            for j in range(n + 1)
        }
        return cls(truncation, levels, faces, degeneracies, name)


def _tables_complete(X: TruncatedSimplicialSet) -> Optional[str]:
    N = X.truncation
    if len(X.levels) != N + 1:
        return f"{len(X.levels)} levels for truncation {N}"
    expected = [((n, i), "face", n - 1) for n in range(1, N + 1) for i in range(n + 1)]
    expected += [((n, j), "degeneracy", n + 1) for n in range(N) for j in range(n + 1)]
    for key, kind, lands in expected:
        table = (X.faces if kind == "face" else X.degeneracies).get(key)
        if table is None:
            return f"missing {kind} table {key}"
        targets = set(X.levels[lands])
        for x in X.levels[key[0]]:
            if table.get(x) not in targets:
                return f"{kind} {key} sends {x!r} outside level {lands}"
    return None


def _identity_failures(X: TruncatedSimplicialSet) -> Optional[str]:
    d, s = X.face, X.degeneracy
    for n in range(2, X.truncation + 1):
        for x in X.levels[n]:
            for i, j in itertools.combinations(range(n + 1), 2):
                if d(n - 1, i, d(n, j, x)) != d(n - 1, j - 1, d(n, i, x)):
                    return f"d_{i} d_{j} != d_{j - 1} d_{i} on {x!r}"
    for n in range(X.truncation):
        for x in X.levels[n]:
            for j in range(n + 1):
                y = s(n, j, x)
                for i in range(n + 2):
                    if i in (j, j + 1):
                        expected = x
                    elif i < j:
                        expected = s(n - 1, j - 1, d(n, i, x))
                    else:
                        expected = s(n - 1, j, d(n, i - 1, x))
                    if d(n + 1, i, y) != expected:
                        return f"d_{i} s_{j} identity fails on {x!r}"
                if n + 1 < X.truncation:
                    for i in range(j + 1):
                        if s(n + 1, i, s(n, j, x)) != s(n + 1, j + 1, s(n, i, x)):
                            return f"s_{i} s_{j} != s_{j + 1} s_{i} on {x!r}"
    return None


def validate_presheaf(X: TruncatedSimplicialSet, rng: Optional[random.Random] = None, samples: int = 50) -> CheckResult:
    """Tables are total, the simplicial identities hold, and sampled composites act correctly."""
    scope = f"N={X.truncation}, {samples} sampled composites"
    problem = _tables_complete(X) or _identity_failures(X)
    if problem:
        return CheckResult.fail(problem, scope)
    rng = rng or random.Random(0)
    N = X.truncation
    for _ in range(samples):
        l, m, n = (rng.randint(0, N) for _ in range(3))
        if not X.levels[n]:
            continue
        f = rng.choice(enumerate_delta(l, m))
        g = rng.choice(enumerate_delta(m, n))
        x = rng.choice(X.levels[n])
        if X.act(compose_delta(g, f), x) != X.act(f, X.act(g, x)):
            return CheckResult.fail(f"X({g} ∘ {f}) differs from X({f}) X({g}) on {x!r}", scope)
    return CheckResult.ok(scope)


def _chain_objects(category: SmallCategory, chain: Tuple[Label, ...]) -> List[Label]:
    return [category.source(chain[0])] + [category.target(f) for f in chain]


def nerve_of_category(category: SmallCategory, truncation: int) -> TruncatedSimplicialSet:
    """
    X_0 are the objects and X_n for n >= 1 the composable chains (f_1, ..., f_n)
    with f_k: a_{k-1} → a_k.
    """
    if truncation < 0:
        raise TruncationError("Truncation must be non-negative")
    levels: List[Tuple[Label, ...]] = [tuple(category.objects)]
    chains = [(f,) for f in category.morphisms]
    for n in range(1, truncation + 1):
        levels.append(tuple(chains))
        chains = [c + (g,) for c in chains for g in category.morphisms if category.source(g) == category.target(c[-1])]

    def act(f: DeltaMap, x: Label) -> Label:
        objects, chain = ([x], ()) if f.n_dst == 0 else (_chain_objects(category, x), x)
        if f.n_src == 0:
            return objects[f.values[0]]
        return tuple(_path(category, objects, chain, a, b) for a, b in zip(f.values, f.values[1:]))

    X = TruncatedSimplicialSet.from_action(truncation, levels, act, name=f"N({category.name})")
    logger.debug(f"Nerve of {category.name} up to level {truncation}: sizes {X.sizes()}")
    return X


def _path(category: SmallCategory, objects: List[Label], chain: Tuple[Label, ...], a: int, b: int) -> Label:
    """The composite f_b ∘ ... ∘ f_{a+1}, or the identity of a_a when a == b."""
    if a == b:
        return category.identities[objects[a]]
    result = chain[a]
    for k in range(a + 1, b):
        result = category.compose(chain[k], result)
    return result


def constant_presheaf(truncation: int, elements: Sequence[Label] = ("*",)) -> TruncatedSimplicialSet:
    """Every level is ``elements`` and every operator is the identity."""
    levels = [tuple(elements)] * (truncation + 1)
    name = "point" if len(elements) == 1 else f"constant{list(elements)}"
    return TruncatedSimplicialSet.from_action(truncation, levels, lambda f, x: x, name=name)


def constant_point(truncation: int) -> TruncatedSimplicialSet:
    return constant_presheaf(truncation)


def duplicate_simplex(X: TruncatedSimplicialSet, n: int, label: Label) -> TruncatedSimplicialSet:
    """
    Add a copy x' of the n-simplex x with every face equal to that of x,
    together with the degenerate simplices s(x') it generates up to the
    truncation. The copy of x is labelled ("copy", x); its degeneracy along
    a surjection σ is ("copy", x, σ values).
    """
    if label not in X.level(n):
        raise PresheafError(f"{label!r} is not an element of X_{n}")

    def copy(sigma: DeltaMap) -> Label:
        if sigma.n_src == sigma.n_dst:
            return ("copy", label)
        return ("copy", label, sigma.values)

    levels = [list(level) for level in X.levels]
    for k in range(n, X.truncation + 1):
        for sigma in enumerate_delta(k, n):
            if sigma.is_surjective:
                levels[k].append(copy(sigma))
    copies = {copy(sigma): sigma for k in range(n, X.truncation + 1) for sigma in enumerate_delta(k, n) if sigma.is_surjective}

    def act(f: DeltaMap, y: Label) -> Label:
        if y not in copies:
            return X.act(f, y)
        composite = compose_delta(copies[y], f)
        surjection, injection = epi_mono(composite)
        if injection.n_src == injection.n_dst:
            return copy(surjection)
        return X.act(surjection, X.act(injection, label))

    return TruncatedSimplicialSet.from_action(
        X.truncation, levels, act, name=f"{X.name} with {label!r} doubled"
    )


def corrupt_face(X: TruncatedSimplicialSet, n: int, i: int, x: Label, value: Label) -> TruncatedSimplicialSet:
    """A copy of X whose face d_i sends x ∈ X_n to ``value``."""
    faces = {key: dict(table) for key, table in X.faces.items()}
    faces[(n, i)][x] = value
    degeneracies = {key: dict(table) for key, table in X.degeneracies.items()}
    return TruncatedSimplicialSet(X.truncation, X.levels, faces, degeneracies, name=f"{X.name} with d_{i} corrupted")
