"""Brute-force exact solvers: ground truth for every specialized algorithm.

Subsets are enumerated in lexicographic order, so ties always resolve to the
lexicographically smallest witness.  Enumeration refuses to start when the
subset count exceeds a guard rather than run unbounded.
"""

from __future__ import annotations

import time
from itertools import combinations
from math import comb

from .errors import GuardExceededError
from .graph import (
    FirebreakInstance,
    Graph,
    KeyPlayerInstance,
    SolveResult,
    component_count_without,
    connectivity,
    separated_count,
)

DEFAULT_SUBSET_GUARD = 10**8


def _check_guard(total: int, guard: int, what: str) -> None:
    if total > guard:
        raise GuardExceededError(
            f"{what}: {total} subsets exceeds guard {guard}"
        )


def firebreak_oracle(
    inst: FirebreakInstance, subset_guard: int = DEFAULT_SUBSET_GUARD
) -> SolveResult:
    """Exact F(G, k, v_f) by enumerating all k-subsets of V minus v_f."""
    start = time.perf_counter()
    g, k, v_f = inst.graph, inst.k, inst.v_f
    _check_guard(comb(g.n - 1, k), subset_guard, "firebreak_oracle")
    candidates = [v for v in range(g.n) if v != v_f]
    bound = g.n - k - 1
    best = -1
    best_set: tuple[int, ...] = ()
    for s in combinations(candidates, k):
        c = separated_count(g, s, v_f)
        if c > best:
            best = c
            best_set = s
            if best == bound:
                break
    return SolveResult(
        value=best,
        witness=best_set,
        decision=best >= inst.t,
        algorithm="oracle",
        elapsed=time.perf_counter() - start,
    )


def keyplayer_oracle(
    inst: KeyPlayerInstance, subset_guard: int = DEFAULT_SUBSET_GUARD
) -> SolveResult:
    """Exact max of c(G-S) over all k-subsets S of V."""
    start = time.perf_counter()
    g, k = inst.graph, inst.k
    _check_guard(comb(g.n, k), subset_guard, "keyplayer_oracle")
    bound = g.n - k
    best = -1
    best_set: tuple[int, ...] = ()
    for s in combinations(range(g.n), k):
        c = component_count_without(g, s)
        if c > best:
            best = c
            best_set = s
            if best == bound:
                break
    return SolveResult(
        value=best,
        witness=best_set,
        decision=best >= inst.t,
        algorithm="keyplayer-oracle",
        elapsed=time.perf_counter() - start,
    )


def count_min_cuts(g: Graph, subset_guard: int = DEFAULT_SUBSET_GUARD) -> int:
    """Number of minimum-cardinality vertex cuts, by enumeration.

    Requires a connected, non-complete graph on at least 2 vertices; complete
    graphs have no cut at all.
    """
    if g.n < 2:
        raise ValueError("count_min_cuts requires at least 2 vertices")
    if g.is_complete():
        raise ValueError("complete graphs have no vertex cut")
    kappa = connectivity(g)
    if kappa == 0:
        raise ValueError("count_min_cuts requires a connected graph")
    _check_guard(comb(g.n, kappa), subset_guard, "count_min_cuts")
    count = 0
    for s in combinations(range(g.n), kappa):
        if component_count_without(g, s) >= 2:
            count += 1
    return count
