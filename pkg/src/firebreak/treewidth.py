"""Exact firebreak solving by dynamic programming over a nice tree
decomposition.

Bag vertices carry one of three colors: Deleted (in the firebreak), Reachable
(still connected toward the fire origin), Separated (cut off).  A coloring is
legal when no graph edge inside a bag joins a Reachable and a Separated vertex
and the origin is Reachable; forgetting a vertex finalizes its contribution to
the budget (Deleted) or the objective (Separated).  The root maximization
considers every budget b <= k and pads the surplus, so the reported witness
always has cardinality exactly k.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import InvalidDecompositionError
from .graph import FirebreakInstance, Graph, SolveResult, pad_to_exact_k

DELETED, REACHABLE, SEPARATED = 0, 1, 2


class ColoringState(NamedTuple):
    """DP table key: per-bag-vertex colors plus deletions finalized below."""

    colors: tuple[int, ...]
    budget_used: int


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags over a tree satisfying the three covering/connectivity axioms."""

    bags: tuple[tuple[int, ...], ...]
    tree_edges: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def validate(self, g: Graph) -> None:
        """Machine-check all three axioms against g; raise on any violation."""
        nb = len(self.bags)
        if nb == 0:
            raise InvalidDecompositionError("no bags")
        if len(self.tree_edges) != nb - 1:
            raise InvalidDecompositionError("bag tree is not a tree")
        adj: list[list[int]] = [[] for _ in range(nb)]
        for i, j in self.tree_edges:
            if not (0 <= i < nb and 0 <= j < nb):
                raise InvalidDecompositionError("tree edge out of range")
            adj[i].append(j)
            adj[j].append(i)
        seen = [False] * nb
        seen[0] = True
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        if not all(seen):
            raise InvalidDecompositionError("bag tree is disconnected")
        covered = [False] * g.n
        holding: list[list[int]] = [[] for _ in range(g.n)]
        for idx, bag in enumerate(self.bags):
            for v in bag:
                if not 0 <= v < g.n:
                    raise InvalidDecompositionError(f"bag vertex {v} out of range")
                covered[v] = True
                holding[v].append(idx)
        if not all(covered):
            raise InvalidDecompositionError("axiom 1: some vertex is in no bag")
        bag_sets = [set(b) for b in self.bags]
        for u, v in g.edges():
            if not any(u in bs and v in bs for bs in bag_sets):
                raise InvalidDecompositionError(
                    f"axiom 2: edge ({u},{v}) covered by no bag"
                )
        for v in range(g.n):
            nodes = set(holding[v])
            start = holding[v][0]
            reached = {start}
            stack = [start]
            while stack:
                i = stack.pop()
                for j in adj[i]:
                    if j in nodes and j not in reached:
                        reached.add(j)
                        stack.append(j)
            if reached != nodes:
                raise InvalidDecompositionError(
                    f"axiom 3: bags holding vertex {v} are not connected"
                )


@dataclass
class NiceNode:
    kind: str  # "leaf" | "introduce" | "forget" | "join"
    bag: tuple[int, ...]
    vertex: Optional[int] = None
    children: tuple[int, ...] = ()


@dataclass
class NiceTreeDecomposition:
    nodes: list[NiceNode]
    root: int
    width: int

    def as_tree_decomposition(self) -> TreeDecomposition:
        edges = []
        for i, node in enumerate(self.nodes):
            edges.extend((i, c) for c in node.children)
        return TreeDecomposition(
            bags=tuple(n.bag for n in self.nodes), tree_edges=tuple(edges)
        )

    def validate(self, g: Graph) -> None:
        """Node-type invariants plus the underlying decomposition axioms."""
        for i, node in enumerate(self.nodes):
            bag = set(node.bag)
            kids = [self.nodes[c] for c in node.children]
            if node.kind == "leaf":
                if node.bag or kids:
                    raise InvalidDecompositionError("leaf must be empty, childless")
            elif node.kind == "introduce":
                if len(kids) != 1 or set(kids[0].bag) | {node.vertex} != bag or (
                    node.vertex in kids[0].bag
                ):
                    raise InvalidDecompositionError(f"bad introduce node {i}")
            elif node.kind == "forget":
                if len(kids) != 1 or bag | {node.vertex} != set(kids[0].bag) or (
                    node.vertex in bag
                ):
                    raise InvalidDecompositionError(f"bad forget node {i}")
            elif node.kind == "join":
                if len(kids) != 2 or any(set(k.bag) != bag for k in kids):
                    raise InvalidDecompositionError(f"bad join node {i}")
            else:
                raise InvalidDecompositionError(f"unknown node kind {node.kind}")
        if self.nodes[self.root].bag:
            raise InvalidDecompositionError("root bag must be empty")
        self.as_tree_decomposition().validate(g)


def build_tree_decomposition(g: Graph) -> TreeDecomposition:
    """Heuristic decomposition from a min-fill elimination ordering.

    Ties break by minimum degree, then lowest vertex id.  The result is
    validated against all three axioms before it is returned; the width may
    exceed the true treewidth (no optimality promise).
    """
    n = g.n
    if n == 0:
        return TreeDecomposition(bags=((),), tree_edges=())
    work: list[set[int]] = [set(g.adjacency[v]) for v in range(n)]
    alive = set(range(n))
    elim_order: list[int] = []
    bags: list[tuple[int, ...]] = []
    neigh_at_elim: list[set[int]] = []
    while alive:
        best_v = -1
        best_key = None
        for v in alive:
            nv = work[v]
            fill = 0
            nl = list(nv)
            for i, a in enumerate(nl):
                wa = work[a]
                for b in nl[i + 1 :]:
                    if b not in wa:
                        fill += 1
            key = (fill, len(nv), v)
            if best_key is None or key < best_key:
                best_key = key
                best_v = v
        v = best_v
        nv = list(work[v])
        for i, a in enumerate(nv):
            for b in nv[i + 1 :]:
                work[a].add(b)
                work[b].add(a)
        for a in nv:
            work[a].discard(v)
        alive.discard(v)
        elim_order.append(v)
        neigh_at_elim.append(set(nv))
        bags.append(tuple(sorted([v] + nv)))
    pos = {v: i for i, v in enumerate(elim_order)}
    edges: list[tuple[int, int]] = []
    roots: list[int] = []
    for i, v in enumerate(elim_order):
        later = neigh_at_elim[i]
        if later:
            parent = min(later, key=lambda u: pos[u])
            edges.append((pos[parent], i))
        else:
            roots.append(i)
    # chain component roots so the bag tree is connected
    for a, b in zip(roots, roots[1:]):
        edges.append((a, b))
    td = TreeDecomposition(bags=tuple(bags), tree_edges=tuple(edges))
    td.validate(g)
    return td


def make_nice(td: TreeDecomposition, g: Optional[Graph] = None) -> NiceTreeDecomposition:
    """Normalize a decomposition into leaf/introduce/forget/join nodes with an
    empty root bag, preserving the width; node count is O(width * n)."""
    nb = len(td.bags)
    if nb == 0:
        raise InvalidDecompositionError("no bags")
    adj: list[list[int]] = [[] for _ in range(nb)]
    for i, j in td.tree_edges:
        adj[i].append(j)
        adj[j].append(i)
    root_bag = 0
    parent = [-1] * nb
    parent[root_bag] = root_bag
    order = [root_bag]
    stack = [root_bag]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if parent[w] == -1:
                parent[w] = u
                order.append(w)
                stack.append(w)
    if len(order) != nb:
        raise InvalidDecompositionError("bag tree is disconnected")

    nodes: list[NiceNode] = []

    def add(kind, bag, vertex=None, children=()):
        nodes.append(NiceNode(kind=kind, bag=tuple(bag), vertex=vertex, children=tuple(children)))
        return len(nodes) - 1

    def chain_from_empty(target: tuple[int, ...]) -> int:
        cur = add("leaf", ())
        have: list[int] = []
        for v in target:
            have.append(v)
            cur = add("introduce", tuple(have), vertex=v, children=(cur,))
        return cur

    def morph(cur: int, src: tuple[int, ...], dst: tuple[int, ...]) -> int:
        """Forget src-only vertices, then introduce dst-only ones."""
        bag = sorted(src)
        for v in sorted(set(src) - set(dst)):
            bag.remove(v)
            cur = add("forget", tuple(bag), vertex=v, children=(cur,))
        for v in sorted(set(dst) - set(src)):
            bag.append(v)
            bag.sort()
            cur = add("introduce", tuple(bag), vertex=v, children=(cur,))
        return cur

    top_of: dict[int, int] = {}
    for b in reversed(order):  # children before parents
        bag = tuple(sorted(td.bags[b]))
        kids = [w for w in adj[b] if parent[w] == b and w != b]
        arms = [morph(top_of[w], tuple(sorted(td.bags[w])), bag) for w in kids]
        if not arms:
            top_of[b] = chain_from_empty(bag)
        else:
            cur = arms[0]
            for other in arms[1:]:
                cur = add("join", bag, children=(cur, other))
            top_of[b] = cur
    root = morph(top_of[root_bag], tuple(sorted(td.bags[root_bag])), ())
    ntd = NiceTreeDecomposition(nodes=nodes, root=root, width=td.width)
    if g is not None:
        ntd.validate(g)
    return ntd


def _check_matches(g: Graph, ntd: NiceTreeDecomposition) -> None:
    covered = bytearray(g.n)
    bag_sets = []
    for node in ntd.nodes:
        s = set(node.bag)
        bag_sets.append(s)
        for v in node.bag:
            if not 0 <= v < g.n:
                raise InvalidDecompositionError("decomposition/graph mismatch")
            covered[v] = 1
    if sum(covered) != g.n:
        raise InvalidDecompositionError("decomposition does not cover the graph")
    for u, v in g.edges():
        if not any(u in s and v in s for s in bag_sets):
            raise InvalidDecompositionError(f"edge ({u},{v}) not covered")


def _node_meta(node: NiceNode, child_bag: tuple[int, ...], g: Graph, v_f: int):
    """Transition data the DP needs at this node."""
    if node.kind == "introduce":
        v = node.vertex
        idx = node.bag.index(v)
        nv = set(g.adjacency[v])
        neigh_pos = tuple(i for i, u in enumerate(child_bag) if u in nv)
        return (idx, neigh_pos, v == v_f)
    if node.kind == "forget":
        return (child_bag.index(node.vertex),)
    return ()


def firebreak_treewidth_dp(
    inst: FirebreakInstance, ntd: NiceTreeDecomposition
) -> SolveResult:
    """Exact F(G, k, v_f) with witness, by bottom-up tables over the nice
    decomposition.

    Tables map ColoringState to the best objective with a back-pointer.
    Budgets count only forgotten Deleted vertices, so join merges stay
    additive without double counting; colorings extend in base-3 order
    (Deleted, Reachable, Separated) for determinism.
    """
    start = time.perf_counter()
    g, k, v_f = inst.graph, inst.k, inst.v_f
    if k > g.n - 1:
        raise ValueError(f"k={k} exceeds n-1={g.n - 1}")
    _check_matches(g, ntd)

    nodes = ntd.nodes
    # postorder over the rooted nice tree
    post: list[int] = []
    stack = [ntd.root]
    while stack:
        i = stack.pop()
        post.append(i)
        stack.extend(nodes[i].children)
    post.reverse()

    # table[i]: dict coloring -> dict budget -> (objective, backptr)
    tables: dict[int, dict] = {}
    metas: dict[int, tuple] = {}
    for i in post:
        node = nodes[i]
        if node.kind == "leaf":
            tables[i] = {(): {0: (0, None)}}
            continue
        child = node.children[0]
        ctab = tables[child]
        metas[i] = _node_meta(node, nodes[child].bag, g, v_f)
        if node.kind == "introduce":
            idx, neigh_pos, is_origin = metas[i]
            table: dict = {}
            for colors, budgets in ctab.items():
                bad = set()
                for p in neigh_pos:
                    c = colors[p]
                    if c == REACHABLE:
                        bad.add(SEPARATED)
                    elif c == SEPARATED:
                        bad.add(REACHABLE)
                if is_origin:
                    options = () if REACHABLE in bad else (REACHABLE,)
                else:
                    options = tuple(
                        c for c in (DELETED, REACHABLE, SEPARATED) if c not in bad
                    )
                for color in options:
                    new_colors = colors[:idx] + (color,) + colors[idx:]
                    slot = table.setdefault(new_colors, {})
                    for b, (obj, _) in budgets.items():
                        cur = slot.get(b)
                        if cur is None or obj > cur[0]:
                            slot[b] = (obj, (child, colors, b))
            tables[i] = table
        elif node.kind == "forget":
            (idx,) = metas[i]
            table = {}
            for colors, budgets in ctab.items():
                color = colors[idx]
                new_colors = colors[:idx] + colors[idx + 1 :]
                db = 1 if color == DELETED else 0
                dobj = 1 if color == SEPARATED else 0
                slot = table.setdefault(new_colors, {})
                for b, (obj, _) in budgets.items():
                    nb = b + db
                    if nb > k:
                        continue
                    no = obj + dobj
                    cur = slot.get(nb)
                    if cur is None or no > cur[0]:
                        slot[nb] = (no, (child, colors, b))
            tables[i] = table
        else:  # join
            left, right = node.children
            ltab, rtab = tables[left], tables[right]
            table = {}
            for colors, lbudgets in ltab.items():
                rbudgets = rtab.get(colors)
                if rbudgets is None:
                    continue
                slot = table.setdefault(colors, {})
                for b1, (o1, _) in lbudgets.items():
                    for b2, (o2, _) in rbudgets.items():
                        nb = b1 + b2
                        if nb > k:
                            continue
                        no = o1 + o2
                        cur = slot.get(nb)
                        if cur is None or no > cur[0]:
                            slot[nb] = (no, (left, colors, b1, right, colors, b2))
            tables[i] = table
    root_table = tables[ntd.root].get((), {})
    if not root_table:
        raise InvalidDecompositionError("empty root table; decomposition mismatch")

    # every budget b <= k is a candidate: pad the surplus from the origin-side
    # component when it is large enough, else from separated vertices
    n = g.n
    best_adj = -1
    best_b = -1
    for b in sorted(root_table):
        obj = root_table[b][0]
        reach_others = n - b - obj - 1
        adj = obj - max(0, (k - b) - reach_others)
        if adj > best_adj:
            best_adj = adj
            best_b = b

    deleted: list[int] = []
    walk = [(ntd.root, (), best_b)]
    while walk:
        i, colors, b = walk.pop()
        node = nodes[i]
        entry = tables[i][colors][b]
        back = entry[1]
        if back is None:
            continue
        if node.kind == "join":
            child1, c1, b1, child2, c2, b2 = back
            walk.append((child1, c1, b1))
            walk.append((child2, c2, b2))
        else:
            child, ccolors, cb = back
            if node.kind == "forget":
                idx = metas[i][0]
                if ccolors[idx] == DELETED:
                    deleted.append(node.vertex)
            walk.append((child, ccolors, cb))

    witness, sep = pad_to_exact_k(g, deleted, v_f, k)
    if sep != best_adj:
        raise RuntimeError(
            f"DP self-check failed: witness separates {sep}, table says {best_adj}"
        )
    return SolveResult(
        value=best_adj,
        witness=witness,
        decision=best_adj >= inst.t,
        algorithm="treewidth-dp",
        elapsed=time.perf_counter() - start,
    )


def coloring_is_legal(g: Graph, colors, v_f: int) -> bool:
    """Whole-graph legality of a full coloring: the origin is Reachable and no
    edge joins a Reachable and a Separated vertex.  Reference semantics for
    the bag-local checks the DP performs."""
    if colors[v_f] != REACHABLE:
        return False
    for u, v in g.edges():
        cu, cv = colors[u], colors[v]
        if (cu == REACHABLE and cv == SEPARATED) or (
            cu == SEPARATED and cv == REACHABLE
        ):
            return False
    return True
