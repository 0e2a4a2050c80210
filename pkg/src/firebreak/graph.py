"""Core graph type, traversals, connectivity, and the separation-count primitive.

Vertices are dense 0-based integers.  Graphs are immutable after construction,
so they are safe to share across concurrent solver runs; every function here is
a pure function of its inputs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class Graph:
    """Undirected simple graph: no loops, no parallel edges, sorted adjacency."""

    __slots__ = ("n", "m", "adjacency", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
            m += 1
        self.n = n
        self.m = m
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(a)) for a in adj
        )
        self._hash: Optional[int] = None

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adjacency[u]
        if len(self.adjacency[v]) < len(a):
            a, u, v = self.adjacency[v], v, u
        return v in a

    def edges(self):
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adjacency == other.adjacency
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adjacency))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class FirebreakInstance:
    """Decision instance: delete a k-set S (fire origin v_f excluded) so that
    at least t vertices of G-S are separated from v_f."""

    graph: Graph
    k: int
    t: int
    v_f: int

    def __post_init__(self):
        n = self.graph.n
        if not 0 <= self.v_f < n:
            raise ValueError(f"v_f={self.v_f} out of range for n={n}")
        if not 0 <= self.k <= n - 1:
            raise ValueError(f"k={self.k} outside 0..{n - 1}")
        if self.t < 0:
            raise ValueError(f"t={self.t} must be nonnegative")


@dataclass(frozen=True)
class KeyPlayerInstance:
    """Decision instance: delete a k-set S so that G-S has at least t components."""

    graph: Graph
    k: int
    t: int

    def __post_init__(self):
        if not 0 <= self.k <= self.graph.n:
            raise ValueError(f"k={self.k} outside 0..{self.graph.n}")
        if self.t < 0:
            raise ValueError(f"t={self.t} must be nonnegative")


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a solver run.

    value is the objective (separated count or component count), witness the
    deleted vertex set in ascending order when one is reported, decision the
    comparison against the instance threshold, and elapsed the wall time in
    seconds.  When several optimal witnesses exist any one may be returned;
    compare values, never witness identity.
    """

    value: int
    witness: Optional[tuple[int, ...]]
    decision: bool
    algorithm: str
    elapsed: float = field(default=0.0, compare=False)


def components(g: Graph) -> tuple[int, list[int]]:
    """Connected components: (count, per-vertex component label).

    Labels are assigned in order of the smallest vertex in each component.
    """
    labels = [-1] * g.n
    count = 0
    adj = g.adjacency
    for start in range(g.n):
        if labels[start] != -1:
            continue
        labels[start] = count
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if labels[w] == -1:
                    labels[w] = count
                    queue.append(w)
        count += 1
    return count, labels


def component_count_without(g: Graph, s: Iterable[int]) -> int:
    """Number of connected components of G-S."""
    blocked = bytearray(g.n)
    removed = 0
    for v in s:
        if not blocked[v]:
            blocked[v] = 1
            removed += 1
    adj = g.adjacency
    seen = bytearray(g.n)
    count = 0
    for start in range(g.n):
        if seen[start] or blocked[start]:
            continue
        count += 1
        seen[start] = 1
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w] and not blocked[w]:
                    seen[w] = 1
                    stack.append(w)
    return count


def separated_count(g: Graph, s: Iterable[int], v_f: int) -> int:
    """How many vertices of G-S are disconnected from v_f.

    Rejects v_f in s and out-of-range ids.  With s empty this is the number
    of vertices outside v_f's component.
    """
    n = g.n
    if not 0 <= v_f < n:
        raise ValueError(f"v_f={v_f} out of range")
    blocked = bytearray(n)
    removed = 0
    for v in s:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range")
        if v == v_f:
            raise ValueError("deleted set must not contain v_f")
        if not blocked[v]:
            blocked[v] = 1
            removed += 1
    adj = g.adjacency
    seen = bytearray(n)
    seen[v_f] = 1
    reached = 1
    stack = [v_f]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w] and not blocked[w]:
                seen[w] = 1
                reached += 1
                stack.append(w)
    return n - removed - reached


def verify_witness(
    inst: FirebreakInstance, s: Iterable[int]
) -> tuple[bool, Optional[int]]:
    """Check a claimed firebreak set: (valid, separated count or None).

    Invalid (wrong cardinality, v_f included, out-of-range or repeated ids)
    is reported, never raised.
    """
    sset = list(s)
    unique = set(sset)
    if len(unique) != len(sset) or len(sset) != inst.k:
        return False, None
    if inst.v_f in unique:
        return False, None
    if any(not 0 <= v < inst.graph.n for v in unique):
        return False, None
    return True, separated_count(inst.graph, unique, inst.v_f)


def pad_to_exact_k(
    g: Graph, base: Iterable[int], v_f: int, k: int
) -> tuple[tuple[int, ...], int]:
    """Grow a deletion set to cardinality exactly k and report its separation.

    Surplus deletions are drawn from v_f's component first (lowest ids), which
    never lowers the separated count, and from separated vertices only when
    the reachable side runs out.  Requires |base| <= k <= n-1 and v_f not in
    base.
    """
    chosen = set(base)
    if v_f in chosen:
        raise ValueError("base set must not contain v_f")
    if len(chosen) > k:
        raise ValueError(f"base set larger than k={k}")
    need = k - len(chosen)
    if need > 0:
        blocked = bytearray(g.n)
        for v in chosen:
            blocked[v] = 1
        seen = bytearray(g.n)
        seen[v_f] = 1
        stack = [v_f]
        adj = g.adjacency
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w] and not blocked[w]:
                    seen[w] = 1
                    stack.append(w)
        reachable = [v for v in range(g.n) if seen[v] and not blocked[v] and v != v_f]
        separated = [
            v for v in range(g.n) if not seen[v] and not blocked[v]
        ]
        for v in reachable[:need]:
            chosen.add(v)
        need -= min(need, len(reachable))
        for v in separated[:need]:
            chosen.add(v)
        need -= min(need, len(separated))
        if need > 0:
            raise ValueError("not enough vertices to pad to k")
    witness = tuple(sorted(chosen))
    return witness, separated_count(g, witness, v_f)


def _split_network(
    g: Graph,
) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Vertex-split digraph for unit-capacity vertex connectivity flows.

    Node 2v is v's in-copy, 2v+1 its out-copy.  Returns parallel adjacency
    and capacity lists; entry j of cap[x] guards arc (x, to[x][j]) and the
    reverse arc index is stored implicitly by construction order.
    """
    big = g.n + 1
    to: list[list[int]] = [[] for _ in range(2 * g.n)]
    cap: list[list[int]] = [[] for _ in range(2 * g.n)]
    rev: list[list[int]] = [[] for _ in range(2 * g.n)]

    def add_arc(a: int, b: int, c: int) -> None:
        to[a].append(b)
        cap[a].append(c)
        rev[a].append(len(to[b]))
        to[b].append(a)
        cap[b].append(0)
        rev[b].append(len(to[a]) - 1)

    for v in range(g.n):
        add_arc(2 * v, 2 * v + 1, 1)
    for u, v in g.edges():
        add_arc(2 * u + 1, 2 * v, big)
        add_arc(2 * v + 1, 2 * u, big)
    return to, cap, rev


def _max_flow(to, cap, rev, source: int, sink: int, cutoff: int) -> int:
    """Edmonds-Karp on the split network, stopping once flow reaches cutoff."""
    flow = 0
    nn = len(to)
    while flow < cutoff:
        parent_node = [-1] * nn
        parent_arc = [-1] * nn
        parent_node[source] = source
        queue = deque([source])
        while queue:
            x = queue.popleft()
            if x == sink:
                break
            tox = to[x]
            capx = cap[x]
            for j in range(len(tox)):
                y = tox[j]
                if capx[j] > 0 and parent_node[y] == -1:
                    parent_node[y] = x
                    parent_arc[y] = j
                    queue.append(y)
        if parent_node[sink] == -1:
            break
        y = sink
        while y != source:
            x = parent_node[y]
            j = parent_arc[y]
            cap[x][j] -= 1
            cap[to[x][j]][rev[x][j]] += 1
            y = x
        flow += 1
    return flow


def connectivity(g: Graph) -> int:
    """Vertex connectivity via vertex-splitting max flow over all
    non-adjacent source/target pairs; n-1 for complete graphs by convention.
    """
    n = g.n
    if n < 2:
        raise ValueError("connectivity requires at least 2 vertices")
    if g.is_complete():
        return n - 1
    count, _ = components(g)
    if count > 1:
        return 0
    best = n - 1
    to0, cap0, rev0 = _split_network(g)
    for u in range(n):
        nu = set(g.adjacency[u])
        for v in range(u + 1, n):
            if v in nu:
                continue
            cap = [list(c) for c in cap0]
            f = _max_flow(to0, cap, rev0, 2 * u + 1, 2 * v, best)
            if f < best:
                best = f
    return best
