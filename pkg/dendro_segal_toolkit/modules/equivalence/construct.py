"""
The two constructions between 2-Segal truncated simplicial sets and
invertible finite operads.

From a simplicial set X the operad has colors X_1 and n-ary operations X_n,
an n-simplex having its spine edges as inputs and its long edge as output.
The composite of θ ∈ X_k with σ_i ∈ X_{n_i} is the unique n-simplex whose
restrictions along the corolla inclusions into T_k^{n_1..n_k} are θ and the
σ_i. From an operad O the simplicial set has X_n = N(O)(C_n), with f acting
through the tree T_f: the unit C_m → T_f after the inverse of the collapse
C_n → T_f.
"""

import itertools
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from dendro_segal_toolkit.dst_core.exceptions import ERROR_SCENARIOS, ArityBoundError, EquivalenceError
from dendro_segal_toolkit.modules.localization import build_tf, collapse_map
from dendro_segal_toolkit.modules.operads import (
    FiniteOperad,
    OperadNerve,
    Signature,
    composable_instances,
    is_invertible_operad,
)
from dendro_segal_toolkit.modules.presheaves import TruncatedSimplicialSet, check_2segal
from dendro_segal_toolkit.modules.simplex_targets import DeltaMap
from dendro_segal_toolkit.modules.trees import make_corolla

logger = logging.getLogger(__name__)


def corolla_inclusions(arities: Sequence[int]) -> Tuple[DeltaMap, List[DeltaMap]]:
    """g_0: [k] → [n], j ↦ n_1+…+n_j, and g_i: [n_i] → [n], j ↦ n_1+…+n_{i-1}+j."""
    n = sum(arities)
    starts = [0] + list(itertools.accumulate(arities))
    outer = DeltaMap(len(arities), n, tuple(starts))
    inners = [DeltaMap(n_i, n, tuple(range(s, s + n_i + 1))) for s, n_i in zip(starts, arities)]
    return outer, inners


def simplicial_to_operad(X: TruncatedSimplicialSet, log: Optional[List[str]] = None) -> FiniteOperad:
    """
    The invertible operad of a 2-Segal set, with arity bound its truncation.

    Raises:
        EquivalenceError: if X is truncated below 2, is not 2-Segal, or a
            composite does not have exactly one filler
    """
    log = [] if log is None else log
    N = X.truncation
    if N < 2:
        raise EquivalenceError(f"Truncation {N} is too small; composites need level 2")
    segal = check_2segal(X)
    if not segal:
        raise EquivalenceError(f"{ERROR_SCENARIOS['not_two_segal']}: {segal.counterexample}")

    operations: Dict = {}
    for n in range(N + 1):
        for sigma in X.level(n):
            inputs = tuple(X.restrict(sigma, n, (i - 1, i)) for i in range(1, n + 1))
            operations[(n, sigma)] = Signature(inputs, X.restrict(sigma, n, (0, n)))
    units = {x: (1, x) for x in X.level(1)}
    operad = FiniteOperad(tuple(X.level(1)), N, operations, units, {}, name=f"Op({X.name})")

    fillers: Dict[Tuple[int, ...], Dict] = {}
    instances: Dict[Tuple[int, ...], int] = {}
    for outer, inners in composable_instances(operad):
        arities = tuple(op[0] for op in inners)
        if arities not in fillers:
            fillers[arities] = _filler_index(X, arities)
        key = (outer[1], tuple(op[1] for op in inners))
        matches = fillers[arities].get(key, [])
        if len(matches) != 1:
            raise EquivalenceError(
                f"γ({outer!r}; {list(inners)!r}) has {len(matches)} fillers in level {sum(arities)}, expected one"
            )
        operad.composition[(outer, inners)] = (sum(arities), matches[0])
        instances[arities] = instances.get(arities, 0) + 1
    for arities, count in sorted(instances.items()):
        message = f"shape {list(arities)}: {count} composites, each with exactly one filler"
        logger.debug(message)
        log.append(message)
    logger.debug(f"{operad.name}: {len(operations)} operations, {len(operad.composition)} composites")
    return operad


def _filler_index(X: TruncatedSimplicialSet, arities: Tuple[int, ...]) -> Dict:
    """Every ρ ∈ X_n keyed by its restrictions along g_0 and the g_i."""
    outer, inners = corolla_inclusions(arities)
    index: Dict = {}
    for rho in X.level(outer.n_dst):
        key = (X.act(outer, rho), tuple(X.act(g, rho) for g in inners))
        index.setdefault(key, []).append(rho)
    return index


def operad_to_simplicial(operad: FiniteOperad, truncation: Optional[int] = None) -> TruncatedSimplicialSet:
    """
    The 2-Segal set X_n = N(O)(C_n), n ≤ truncation.

    Raises:
        ArityBoundError: if the truncation exceeds the arity bound
        EquivalenceError: if the operad is not invertible
    """
    N = operad.arity_bound if truncation is None else truncation
    if N > operad.arity_bound:
        raise ArityBoundError(f"Truncation {N} exceeds the arity bound {operad.arity_bound}")
    invertible = is_invertible_operad(operad)
    if not invertible:
        raise EquivalenceError(f"{ERROR_SCENARIOS['not_invertible']}: {invertible.counterexample}")

    nerve = OperadNerve(operad, max_vertices=N + 2)
    levels = [nerve.value(make_corolla(n)) for n in range(N + 1)]
    transports: Dict[DeltaMap, Tuple] = {}

    def act(f: DeltaMap, x):
        if f not in transports:
            tf, unit = build_tf(make_corolla(f.n_src), f)
            collapse = collapse_map(tf)
            inverse = {nerve.act(collapse, y): y for y in nerve.value(tf)}
            if len(inverse) != len(nerve.value(tf)) or set(inverse) != set(levels[f.n_dst]):
                raise EquivalenceError(f"N(O) does not invert the collapse onto {tf.encoding}")
            transports[f] = (unit, inverse)
        unit, inverse = transports[f]
        return nerve.act(unit, inverse[x])

    X = TruncatedSimplicialSet.from_action(N, levels, act, name=f"X({operad.name})")
    logger.debug(f"{X.name}: sizes {X.sizes()}")
    return X
