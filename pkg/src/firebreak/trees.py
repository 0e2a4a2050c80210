"""Linear-time firebreak solver on trees.

Root the tree at the fire origin; the optimal firebreak takes the k children
with the largest subtree sizes.  Rooting is iterative and the k largest sizes
are found by a counting pass, not a sort, so million-vertex trees stay linear
and inside the recursion limit.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .closed_form import firebreak_easy
from .errors import NotATreeError
from .graph import FirebreakInstance, Graph, SolveResult


@dataclass(frozen=True)
class RootedSubtreeSizes:
    """Parent pointers (root's parent is -1) and per-vertex subtree sizes."""

    root: int
    parent: tuple[int, ...]
    size: tuple[int, ...]


def root_subtree_sizes(g: Graph, root: int) -> RootedSubtreeSizes:
    """Root a tree and compute every subtree's vertex count iteratively."""
    n = g.n
    if g.m != n - 1:
        raise NotATreeError(f"tree needs n-1 edges, got m={g.m} for n={n}")
    parent = [-2] * n
    parent[root] = -1
    order = [root]
    stack = [root]
    adj = g.adjacency
    while stack:
        u = stack.pop()
        pu = parent[u]
        for w in adj[u]:
            if w != pu:
                if parent[w] != -2:
                    raise NotATreeError("graph contains a cycle")
                parent[w] = u
                order.append(w)
                stack.append(w)
    if len(order) != n:
        raise NotATreeError("graph is not connected")
    size = [1] * n
    for u in reversed(order):
        p = parent[u]
        if p >= 0:
            size[p] += size[u]
    return RootedSubtreeSizes(root=root, parent=tuple(parent), size=tuple(size))


def firebreak_tree(inst: FirebreakInstance) -> SolveResult:
    """Exact firebreak on a tree: delete the k children of v_f with the
    greatest subtree sizes; each chosen child's subtree minus the child itself
    is separated."""
    start = time.perf_counter()
    g, k, v_f = inst.graph, inst.k, inst.v_f
    if k >= g.degree(v_f):
        root_subtree_sizes(g, v_f)  # still reject non-trees
        res = firebreak_easy(inst)
        return SolveResult(
            value=res.value,
            witness=res.witness,
            decision=res.decision,
            algorithm="tree",
            elapsed=time.perf_counter() - start,
        )
    rooted = root_subtree_sizes(g, v_f)
    children = g.neighbors(v_f)
    size = rooted.size
    # counting selection of the k largest child subtree sizes; ties break
    # toward lower vertex id because adjacency lists are ascending
    buckets: dict[int, list[int]] = {}
    max_size = 0
    for c in children:
        s = size[c]
        buckets.setdefault(s, []).append(c)
        if s > max_size:
            max_size = s
    chosen: list[int] = []
    total = 0
    s = max_size
    while len(chosen) < k and s > 0:
        group = buckets.get(s)
        if group:
            take = min(k - len(chosen), len(group))
            chosen.extend(group[:take])
            total += s * take
        s -= 1
    value = total - k
    return SolveResult(
        value=value,
        witness=tuple(sorted(chosen)),
        decision=value >= inst.t,
        algorithm="tree",
        elapsed=time.perf_counter() - start,
    )
