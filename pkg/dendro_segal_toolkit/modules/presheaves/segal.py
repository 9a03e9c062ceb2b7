"""
Segal conditions on truncated simplicial sets.

Every condition asks that some square or cone of finite sets be a limit.
Limits of finite sets are computed as subsets of the product with equal
images, and the comparison map must be a bijection.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Sequence

from dendro_segal_toolkit.dst_core.verdict import CheckResult
from dendro_segal_toolkit.modules.simplex_targets import DeltaMap

from .simplicial import Label, TruncatedSimplicialSet

logger = logging.getLogger(__name__)


def pullback_defect(
    elements: Sequence[Label],
    to_left: Callable[[Label], Label],
    to_right: Callable[[Label], Label],
    left: Iterable[Label],
    right: Iterable[Label],
    left_to_base: Callable[[Label], Label],
    right_to_base: Callable[[Label], Label],
) -> Optional[str]:
    """
    None if ``elements`` maps bijectively onto left ×_base right, otherwise
    a description of the defect. The square is assumed to commute.
    """
    images = [(to_left(x), to_right(x)) for x in elements]
    seen = {}
    for x, pair in zip(elements, images):
        if pair in seen:
            return f"{seen[pair]!r} and {x!r} have the same image {pair!r}"
        seen[pair] = x
    left_counts = Counter(left_to_base(a) for a in left)
    right_counts = Counter(right_to_base(b) for b in right)
    size = sum(count * right_counts[base] for base, count in left_counts.items())
    if size != len(images):
        return f"the fiber product has {size} elements but only {len(images)} are hit"
    return None


def _edge(n: int, a: int, b: int) -> DeltaMap:
    return DeltaMap(1, n, (a, b))


def spine_defect(X: TruncatedSimplicialSet, n: int) -> Optional[str]:
    """None if X_n → X_1 ×_{X_0} ... ×_{X_0} X_1 is a bijection."""
    edges = X.level(1)
    spines = {}
    for x in X.level(n):
        spine = tuple(X.act(_edge(n, k - 1, k), x) for k in range(1, n + 1))
        if spine in spines:
            return f"{spines[spine]!r} and {x!r} share the spine {spine!r}"
        spines[spine] = x
    # chains of k composable edges ending at each vertex
    ways = Counter(X.face(1, 0, e) for e in edges)
    for _ in range(n - 1):
        ways = Counter(
            {v: sum(ways[X.face(1, 1, e)] for e in edges if X.face(1, 0, e) == v) for v in X.level(0)}
        )
    size = sum(ways.values())
    if size != len(spines):
        return f"{size} composable spines of length {n} but {len(spines)} {n}-simplices"
    return None


def check_1segal(X: TruncatedSimplicialSet) -> CheckResult:
    scope = f"2 <= n <= {X.truncation}"
    for n in range(2, X.truncation + 1):
        problem = spine_defect(X, n)
        if problem:
            return CheckResult.fail(f"n={n}: {problem}", scope)
    return CheckResult.ok(scope)


@dataclass(frozen=True)
class TwoSegalSquare:
    """
    The square X_m → X_{i..j} ×_{X_{i,j}} X_{0..i,j..m}. For i == j the
    lower face is the degeneracy along {0..i,i..m} and the base is the
    degenerate edge at i.
    """

    i: int
    j: int
    m: int

    @property
    def upper(self) -> DeltaMap:
        return DeltaMap(self.j - self.i, self.m, tuple(range(self.i, self.j + 1)))

    @property
    def lower(self) -> DeltaMap:
        values = tuple(range(self.i + 1)) + tuple(range(self.j, self.m + 1))
        return DeltaMap(len(values) - 1, self.m, values)

    @property
    def upper_edge(self) -> DeltaMap:
        return _edge(self.j - self.i, 0, self.j - self.i)

    @property
    def lower_edge(self) -> DeltaMap:
        return _edge(self.lower.n_src, self.i, self.i + 1)


def two_segal_squares(truncation: int) -> List[TwoSegalSquare]:
    """All squares for 0 <= i <= j <= m <= N whose corners stay within the truncation."""
    squares = [
        TwoSegalSquare(i, j, m)
        for m in range(truncation + 1)
        for i in range(m + 1)
        for j in range(i, m + 1)
        if i < j or m + 1 <= truncation
    ]
    logger.debug(f"{len(squares)} 2-Segal squares up to level {truncation}")
    return squares


def square_defect(X: TruncatedSimplicialSet, square: TwoSegalSquare) -> Optional[str]:
    upper, lower = square.upper, square.lower
    return pullback_defect(
        X.level(square.m),
        lambda x: X.act(upper, x),
        lambda x: X.act(lower, x),
        X.level(upper.n_src),
        X.level(lower.n_src),
        lambda a: X.act(square.upper_edge, a),
        lambda b: X.act(square.lower_edge, b),
    )


def check_2segal(X: TruncatedSimplicialSet) -> CheckResult:
    squares = two_segal_squares(X.truncation)
    scope = f"N={X.truncation}, {len(squares)} squares (degenerate squares included)"
    for square in squares:
        problem = square_defect(X, square)
        if problem:
            return CheckResult.fail(f"(i, j, m) = ({square.i}, {square.j}, {square.m}): {problem}", scope)
    return CheckResult.ok(scope)


def check_reduced_segal(X: TruncatedSimplicialSet) -> CheckResult:
    """X_0 is a point and X_n → X_1^n along the inert edges is a bijection."""
    scope = f"n <= {X.truncation}"
    if len(X.level(0)) != 1:
        return CheckResult.fail(f"X_0 has {len(X.level(0))} elements", scope)
    edges = len(X.level(1)) if X.truncation >= 1 else 0
    for n in range(2, X.truncation + 1):
        products = {}
        for x in X.level(n):
            key = tuple(X.act(_edge(n, k - 1, k), x) for k in range(1, n + 1))
            if key in products:
                return CheckResult.fail(f"{products[key]!r} and {x!r} share their inert edges", scope)
            products[key] = x
        if len(products) != edges**n:
            return CheckResult.fail(f"X_{n} has {len(products)} elements, X_1^{n} has {edges ** n}", scope)
    return CheckResult.ok(scope)
