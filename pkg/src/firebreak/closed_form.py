"""Linear-time special cases and the bounded-degree polynomial solver."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import NotSplitError
from .graph import FirebreakInstance, Graph, SolveResult
from .oracle import DEFAULT_SUBSET_GUARD, firebreak_oracle


@dataclass(frozen=True)
class SplitPartition:
    """Vertex partition into a maximum clique and an independent set."""

    clique: tuple[int, ...]
    independent: tuple[int, ...]


def firebreak_easy(inst: FirebreakInstance) -> SolveResult:
    """Solve an instance with |N(v_f)| <= k: the whole neighbourhood fits in
    the firebreak, so exactly n-k-1 vertices are separated."""
    start = time.perf_counter()
    g, k, v_f = inst.graph, inst.k, inst.v_f
    neigh = g.neighbors(v_f)
    if len(neigh) > k:
        raise ValueError(
            f"firebreak_easy requires |N(v_f)| <= k, got {len(neigh)} > {k}"
        )
    closed = set(neigh) | {v_f}
    witness = list(neigh)
    for v in range(g.n):
        if len(witness) == k:
            break
        if v not in closed:
            witness.append(v)
    value = g.n - k - 1
    return SolveResult(
        value=value,
        witness=tuple(sorted(witness)),
        decision=value >= inst.t,
        algorithm="easy",
        elapsed=time.perf_counter() - start,
    )


def split_partition(g: Graph) -> SplitPartition:
    """Recognize a split graph from its degree sequence.

    Vertices sorted by descending degree; the split threshold m is the largest
    index with d_i >= i-1, and the graph is split exactly when the top-m
    degrees absorb all edges among themselves.  The candidate partition is
    then verified explicitly, so the result is self-certifying.
    """
    n = g.n
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    m = 0
    for i in range(1, n + 1):
        if degs[i - 1] >= i - 1:
            m = i
    top = sum(degs[:m])
    rest = sum(degs[m:])
    if top != m * (m - 1) + rest:
        raise NotSplitError("degree sequence fails the split condition")
    clique = sorted(order[:m])
    independent = sorted(order[m:])
    for i, u in enumerate(clique):
        for v in clique[i + 1 :]:
            if not g.has_edge(u, v):
                raise NotSplitError(f"candidate clique misses edge ({u},{v})")
    for i, u in enumerate(independent):
        for v in independent[i + 1 :]:
            if g.has_edge(u, v):
                raise NotSplitError(f"candidate independent set has edge ({u},{v})")
    return SplitPartition(clique=tuple(clique), independent=tuple(independent))


def keyplayer_split(
    g: Graph, part: SplitPartition, k: int, t: int = 0
) -> SolveResult:
    """Key Player on a split graph when k covers the whole clique side:
    delete the clique plus filler from the independent side, leaving n-k
    isolated vertices."""
    start = time.perf_counter()
    if k < len(part.clique):
        raise ValueError(
            f"keyplayer_split requires k >= |clique|, got {k} < {len(part.clique)}"
        )
    if k > g.n:
        raise ValueError(f"k={k} exceeds n={g.n}")
    witness = list(part.clique) + list(part.independent[: k - len(part.clique)])
    value = g.n - k
    return SolveResult(
        value=value,
        witness=tuple(sorted(witness)),
        decision=value >= t,
        algorithm="split",
        elapsed=time.perf_counter() - start,
    )


def firebreak_bounded_degree(
    inst: FirebreakInstance, subset_guard: int = DEFAULT_SUBSET_GUARD
) -> SolveResult:
    """Polynomial solver for bounded-degree graphs: the easy case when the
    budget covers deg(v_f), otherwise exhaustive search whose exponent is
    capped by k < deg(v_f) <= max degree."""
    start = time.perf_counter()
    if inst.k >= inst.graph.degree(inst.v_f):
        res = firebreak_easy(inst)
    else:
        res = firebreak_oracle(inst, subset_guard=subset_guard)
    return SolveResult(
        value=res.value,
        witness=res.witness,
        decision=res.decision,
        algorithm="bounded-degree",
        elapsed=time.perf_counter() - start,
    )
