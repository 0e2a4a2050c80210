"""Polynomial firebreak solvers for permutation graphs and subtree-in-tree
intersection graphs of bounded leafage.

Both solvers sweep the geometric representation for separator candidates and
exhaustively combine them.  Separated mass is always recomputed on the actual
graph via separated_count, so degenerate representations cannot skew counts.
Representations are inputs; recognition is out of scope.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import GuardExceededError
from .graph import Graph, SolveResult, pad_to_exact_k, separated_count

DEFAULT_LEAFAGE_GUARD = 4


@dataclass(frozen=True)
class PermutationRepresentation:
    """Segments between two parallel lines: vertex i runs from top position i
    to bottom position pi[i]; vertices are adjacent iff their segments cross."""

    pi: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.pi) != list(range(len(self.pi))):
            raise ValueError("pi must be a permutation of 0..n-1")

    @property
    def n(self) -> int:
        return len(self.pi)


@dataclass(frozen=True)
class SubtreeRepresentation:
    """Subtrees of a host tree: graph vertices are adjacent iff their
    subtrees share a host node.  Leafage is the host's leaf count."""

    host_n: int
    host_edges: tuple[tuple[int, int], ...]
    subtrees: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        norm = tuple(
            sorted((u, v) if u < v else (v, u) for u, v in self.host_edges)
        )
        object.__setattr__(self, "host_edges", norm)
        object.__setattr__(
            self, "subtrees", tuple(tuple(sorted(set(s))) for s in self.subtrees)
        )
        host = Graph(self.host_n, self.host_edges)
        if self.host_n < 1 or host.m != self.host_n - 1:
            raise ValueError("host must be a tree")
        seen = _reach(host.adjacency, 0)
        if sum(seen) != self.host_n:
            raise ValueError("host must be connected")
        for v, nodes in enumerate(self.subtrees):
            if not nodes:
                raise ValueError(f"subtree of vertex {v} is empty")
            if any(not 0 <= x < self.host_n for x in nodes):
                raise ValueError(f"subtree of vertex {v} leaves the host")
            if not _induces_subtree(host.adjacency, nodes):
                raise ValueError(f"subtree of vertex {v} is not connected")

    @property
    def n(self) -> int:
        return len(self.subtrees)

    @property
    def leafage(self) -> int:
        if self.host_n == 1:
            return 1
        deg = [0] * self.host_n
        for u, v in self.host_edges:
            deg[u] += 1
            deg[v] += 1
        return sum(1 for d in deg if d == 1)


def _reach(adjacency, start) -> bytearray:
    seen = bytearray(len(adjacency))
    seen[start] = 1
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adjacency[u]:
            if not seen[w]:
                seen[w] = 1
                stack.append(w)
    return seen


def _induces_subtree(adjacency, nodes) -> bool:
    node_set = set(nodes)
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        u = stack.pop()
        for w in adjacency[u]:
            if w in node_set and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(node_set)


@lru_cache(maxsize=None)
def permutation_graph(rep: PermutationRepresentation) -> Graph:
    """Crossing graph of the representation: i ~ j iff the segments invert."""
    pi = rep.pi
    n = rep.n
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if pi[i] > pi[j]
    ]
    return Graph(n, edges)


@lru_cache(maxsize=None)
def _cutline_candidates(
    rep: PermutationRepresentation,
) -> tuple[tuple[frozenset, tuple[tuple[int, int], ...]], ...]:
    """Deduplicated crossing sets, each with the cut-lines producing it.

    Cut-line (a, b) runs from the gap after top position a to the gap after
    bottom position b; a segment crosses it iff its endpoints fall on opposite
    sides.
    """
    pi = rep.pi
    n = rep.n
    by_set: dict[frozenset, list[tuple[int, int]]] = {}
    for a in range(n - 1):
        for b in range(n - 1):
            crossed = frozenset(
                i for i in range(n) if (i <= a) != (pi[i] <= b)
            )
            by_set.setdefault(crossed, []).append((a, b))
    return tuple(
        (s, tuple(lines)) for s, lines in sorted(by_set.items(), key=lambda kv: sorted(kv[0]))
    )


def _is_minimal_separator(g: Graph, s: frozenset) -> bool:
    """True iff G-s has at least two components whose neighbourhood is all of s."""
    blocked = set(s)
    seen = bytearray(g.n)
    full = 0
    for start in range(g.n):
        if seen[start] or start in blocked:
            continue
        comp_neigh: set[int] = set()
        seen[start] = 1
        stack = [start]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if w in blocked:
                    comp_neigh.add(w)
                elif not seen[w]:
                    seen[w] = 1
                    stack.append(w)
        if comp_neigh == blocked:
            full += 1
            if full >= 2:
                return True
    return False


def cutline_minimal_separators(
    rep: PermutationRepresentation,
) -> list[tuple[int, ...]]:
    """All minimal vertex separators of the crossing graph, one sweep of the
    (n-1)^2 cut-lines with non-separator candidates dropped.  For a
    disconnected graph the empty set is itself a (trivial) separator."""
    g = permutation_graph(rep)
    out = [
        tuple(sorted(s))
        for s, _ in _cutline_candidates(rep)
        if _is_minimal_separator(g, s)
    ]
    return sorted(out)


def _easy_result(g: Graph, k: int, t: int, v_f: int, tag: str, start: float) -> SolveResult:
    closed = set(g.neighbors(v_f)) | {v_f}
    witness = list(g.neighbors(v_f))
    for v in range(g.n):
        if len(witness) == k:
            break
        if v not in closed:
            witness.append(v)
    value = g.n - k - 1
    return SolveResult(
        value=value,
        witness=tuple(sorted(witness)),
        decision=value >= t,
        algorithm=tag,
        elapsed=time.perf_counter() - start,
    )


@lru_cache(maxsize=2048)
def _permutation_pair_stats(
    rep: PermutationRepresentation, k: int, v_f: int
) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Per candidate pair (S, T), in lexicographic order: the largest threshold
    the pair can certify after padding the budget to exactly k, and the union.

    Family L holds candidate sets whose cut-line lies right of v_f's segment,
    family R those with the cut-line on the left; the empty set joins both so
    one-sided firebreaks are found.
    """
    g = permutation_graph(rep)
    n = g.n
    left_family: list[tuple[int, ...]] = []
    right_family: list[tuple[int, ...]] = []
    for s, lines in _cutline_candidates(rep):
        if v_f in s or len(s) > k or not s:
            continue
        key = tuple(sorted(s))
        # v_f does not cross any producing line, so one endpoint test decides.
        if any(v_f <= a for a, _ in lines):
            left_family.append(key)
        if any(v_f > a for a, _ in lines):
            right_family.append(key)
    stats: list[tuple[int, tuple[int, ...]]] = []
    seen_unions: set[tuple[int, ...]] = set()
    for s in [()] + sorted(set(left_family)):
        for t_set in [()] + sorted(set(right_family)):
            union = tuple(sorted(set(s) | set(t_set)))
            if len(union) > k or union in seen_unions:
                continue
            seen_unions.add(union)
            sep = separated_count(g, union, v_f)
            reach_others = n - len(union) - sep - 1
            tmax = sep - max(0, k - len(union) - reach_others)
            stats.append((tmax, union))
    return tuple(stats)


def firebreak_permutation(
    rep: PermutationRepresentation, k: int, t: int, v_f: int
) -> SolveResult:
    """Decision solver on permutation graphs via the cut-line separator sweep.

    Pairs one separator from each side of v_f, accepts when the pair separates
    at least t vertices and the remaining budget can be padded to exactly k,
    and reports the first accepting pair in lexicographic order.
    """
    start = time.perf_counter()
    g = permutation_graph(rep)
    _validate_solver_args(g, k, t, v_f)
    if g.degree(v_f) <= k:
        return _easy_result(g, k, t, v_f, "permutation", start)
    best = 0
    for tmax, union in _permutation_pair_stats(rep, k, v_f):
        if tmax >= t:
            witness, sep = pad_to_exact_k(g, union, v_f, k)
            return SolveResult(
                value=sep,
                witness=witness,
                decision=True,
                algorithm="permutation",
                elapsed=time.perf_counter() - start,
            )
        best = max(best, tmax)
    return SolveResult(
        value=best,
        witness=None,
        decision=False,
        algorithm="permutation",
        elapsed=time.perf_counter() - start,
    )


def firebreak_permutation_value(
    rep: PermutationRepresentation, k: int, v_f: int
) -> SolveResult:
    """Optimal separated count by binary search over the decision solver."""
    return _binary_search_value(
        lambda t: firebreak_permutation(rep, k, t, v_f), rep.n, k
    )


def _validate_solver_args(g: Graph, k: int, t: int, v_f: int) -> None:
    if not 0 <= v_f < g.n:
        raise ValueError(f"v_f={v_f} out of range")
    if not 0 <= k <= g.n - 1:
        raise ValueError(f"k={k} outside 0..{g.n - 1}")
    if t < 0:
        raise ValueError("t must be nonnegative")


def _binary_search_value(decide, n: int, k: int) -> SolveResult:
    start = time.perf_counter()
    lo, hi = 0, n - k - 1
    best = decide(0)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        res = decide(mid)
        if res.decision:
            best = res
            lo = mid
        else:
            hi = mid - 1
    return SolveResult(
        value=lo,
        witness=best.witness,
        decision=best.decision,
        algorithm=best.algorithm,
        elapsed=time.perf_counter() - start,
    )


@lru_cache(maxsize=None)
def subtree_graph(rep: SubtreeRepresentation) -> Graph:
    """Intersection graph: u ~ v iff their host subtrees share a node."""
    sets = [set(s) for s in rep.subtrees]
    n = len(sets)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if sets[u] & sets[v]
    ]
    return Graph(n, edges)


@lru_cache(maxsize=None)
def _host_leaf_paths(
    rep: SubtreeRepresentation, v_f: int
) -> tuple[tuple[frozenset, ...], ...]:
    """Per host leaf: candidate separators along the path toward v_f's subtree.

    Walking from the leaf to the first node of subtree(v_f), each intermediate
    host node u contributes the set of vertices whose subtrees contain u, and
    each path edge (including the one entering the subtree) contributes the
    vertices whose subtrees span it.  None of these contain v_f.
    """
    host = Graph(rep.host_n, rep.host_edges)
    covers: list[set[int]] = [set() for _ in range(rep.host_n)]
    for v, nodes in enumerate(rep.subtrees):
        for x in nodes:
            covers[x].add(v)
    target = set(rep.subtrees[v_f])
    # parents point one hop closer to the subtree of v_f
    parent = [-1] * rep.host_n
    dist = [-1] * rep.host_n
    queue = deque()
    for x in target:
        dist[x] = 0
        queue.append(x)
    while queue:
        u = queue.popleft()
        for w in host.adjacency[u]:
            if dist[w] == -1:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
    if rep.host_n == 1:
        leaves = [0]
    else:
        leaves = [u for u in range(rep.host_n) if host.degree(u) == 1]
    paths: list[tuple[frozenset, ...]] = []
    for leaf in leaves:
        cands: list[frozenset] = []
        u = leaf
        while u not in target:
            nxt = parent[u]
            node_set = frozenset(covers[u])
            edge_set = frozenset(covers[u] & covers[nxt])
            for s in (node_set, edge_set):
                if s and (not cands or s != cands[-1]):
                    cands.append(s)
            u = nxt
        paths.append(tuple(cands))
    return tuple(paths)


@lru_cache(maxsize=2048)
def _subtree_choice_stats(
    rep: SubtreeRepresentation, k: int, v_f: int
) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Like the permutation pair stats: per combination of at most one
    candidate per leaf path, the largest certifiable threshold and the union."""
    g = subtree_graph(rep)
    n = g.n
    paths = _host_leaf_paths(rep, v_f)
    stats: list[tuple[int, tuple[int, ...]]] = []
    seen_unions: set[tuple[int, ...]] = set()
    for choice in product(*[(None, *path) for path in paths]):
        union_set: set[int] = set()
        for s in choice:
            if s:
                union_set |= s
        union = tuple(sorted(union_set))
        if len(union) > k or union in seen_unions:
            continue
        seen_unions.add(union)
        sep = separated_count(g, union, v_f)
        reach_others = n - len(union) - sep - 1
        tmax = sep - max(0, k - len(union) - reach_others)
        stats.append((tmax, union))
    return tuple(stats)


def firebreak_subtree(
    rep: SubtreeRepresentation,
    k: int,
    t: int,
    v_f: int,
    leafage_guard: int = DEFAULT_LEAFAGE_GUARD,
) -> SolveResult:
    """Decision solver on subtree intersection graphs of bounded leafage.

    Chooses at most one separator candidate per host leaf path, unions them,
    and accepts when the union separates at least t vertices within a budget
    paddable to exactly k."""
    start = time.perf_counter()
    if rep.leafage > leafage_guard:
        raise GuardExceededError(
            f"host leafage {rep.leafage} exceeds guard {leafage_guard}"
        )
    g = subtree_graph(rep)
    _validate_solver_args(g, k, t, v_f)
    if g.degree(v_f) <= k:
        return _easy_result(g, k, t, v_f, "subtree", start)
    best = 0
    for tmax, union in _subtree_choice_stats(rep, k, v_f):
        if tmax >= t:
            witness, sep = pad_to_exact_k(g, union, v_f, k)
            return SolveResult(
                value=sep,
                witness=witness,
                decision=True,
                algorithm="subtree",
                elapsed=time.perf_counter() - start,
            )
        best = max(best, tmax)
    return SolveResult(
        value=best,
        witness=None,
        decision=False,
        algorithm="subtree",
        elapsed=time.perf_counter() - start,
    )


def firebreak_subtree_value(
    rep: SubtreeRepresentation,
    k: int,
    v_f: int,
    leafage_guard: int = DEFAULT_LEAFAGE_GUARD,
) -> SolveResult:
    """Optimal separated count by binary search over the decision solver."""
    return _binary_search_value(
        lambda t: firebreak_subtree(rep, k, t, v_f, leafage_guard), rep.n, k
    )


def interval_representation(
    intervals: list[tuple[int, int]]
) -> SubtreeRepresentation:
    """Encode closed integer intervals as subtrees of a host path, so interval
    graphs route through the leafage-2 solver."""
    if not intervals:
        raise ValueError("need at least one interval")
    top = 0
    for lo, hi in intervals:
        if lo < 0 or hi < lo:
            raise ValueError(f"bad interval ({lo},{hi})")
        top = max(top, hi)
    host_n = top + 1
    host_edges = tuple((i, i + 1) for i in range(host_n - 1))
    subtrees = tuple(tuple(range(lo, hi + 1)) for lo, hi in intervals)
    return SubtreeRepresentation(host_n, host_edges, subtrees)
