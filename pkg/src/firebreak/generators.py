"""Deterministic instance generators.

All generators are pure functions of their parameters and seed.  Randomness
comes from a self-contained xorshift64* stream so instances reproduce exactly
across machines and implementations.
"""

from __future__ import annotations

from itertools import combinations

from .closed_form import SplitPartition
from .graph import Graph
from .intersection import PermutationRepresentation

_MASK = (1 << 64) - 1
_MULT = 0x2545F4914F6CDD1D
_SEED_FILL = 0x9E3779B97F4A7C15


class XorShift64Star:
    """xorshift64* generator; a zero seed is replaced by a fixed constant."""

    def __init__(self, seed: int):
        self.state = seed & _MASK or _SEED_FILL

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x = (x ^ (x << 25)) & _MASK
        x ^= x >> 27
        self.state = x
        return (x * _MULT) & _MASK

    def randrange(self, n: int) -> int:
        """Uniform-ish integer in [0, n) via the multiply-shift reduction."""
        if n <= 0:
            raise ValueError("randrange needs a positive bound")
        return (self.next_u64() * n) >> 64

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def shuffle(self, seq: list) -> None:
        for i in range(len(seq) - 1, 0, -1):
            j = self.randrange(i + 1)
            seq[i], seq[j] = seq[j], seq[i]


def gen_manycuts(t: int) -> Graph:
    """Four copies of K_t joined by t disjoint paths of length 3.

    Vertices j*t .. j*t+t-1 form clique Q_j; row i is the path
    Q_0[i] - Q_1[i] - Q_2[i] - Q_3[i].  The graph has n = 4t vertices,
    m = 4*C(t,2) + 3t edges, connectivity t, and more than 2^t minimum cuts.
    """
    if t < 2:
        raise ValueError("gen_manycuts requires t >= 2")
    edges = []
    for j in range(4):
        base = j * t
        edges.extend((base + a, base + b) for a, b in combinations(range(t), 2))
    for j in range(3):
        edges.extend((j * t + i, (j + 1) * t + i) for i in range(t))
    return Graph(4 * t, edges)


def gen_split(na: int, nb: int, p: float, seed: int) -> tuple[Graph, SplitPartition]:
    """Random split graph: clique side of na vertices 0..na-1, independent side
    of nb vertices na..na+nb-1, each clique/independent pair joined with
    probability p.  An independent vertex never gets all of the clique as
    neighbours, so the clique side stays the unique maximum clique.
    """
    if na < 1 or nb < 0:
        raise ValueError("gen_split requires na >= 1 and nb >= 0")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    rng = XorShift64Star(seed)
    edges = list(combinations(range(na), 2))
    for b in range(na, na + nb):
        picked = [a for a in range(na) if rng.random() < p]
        if len(picked) == na:
            picked.pop()
        edges.extend((a, b) for a in picked)
    g = Graph(na + nb, edges)
    return g, SplitPartition(
        clique=tuple(range(na)), independent=tuple(range(na, na + nb))
    )


def gen_permutation(n: int, seed: int) -> PermutationRepresentation:
    """Random permutation representation on n segments."""
    if n < 1:
        raise ValueError("gen_permutation requires n >= 1")
    rng = XorShift64Star(seed)
    pi = list(range(n))
    rng.shuffle(pi)
    return PermutationRepresentation(pi=tuple(pi))


def gen_tree(n: int, seed: int) -> Graph:
    """Random tree: vertex i attaches to a uniform parent among 0..i-1."""
    if n < 1:
        raise ValueError("gen_tree requires n >= 1")
    rng = XorShift64Star(seed)
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return Graph(n, edges)


def gen_partial_ktree(n: int, w: int, q: float, seed: int) -> Graph:
    """Random partial w-tree: build a w-tree, then keep each edge with
    probability q.  Treewidth is at most w by construction."""
    if n < 1 or w < 1:
        raise ValueError("gen_partial_ktree requires n >= 1 and w >= 1")
    if not 0.0 <= q <= 1.0:
        raise ValueError("q must be in [0, 1]")
    rng = XorShift64Star(seed)
    base = min(n, w + 1)
    edges = set(combinations(range(base), 2))
    cliques = [tuple(range(base))] if base == w + 1 else []
    for v in range(base, n):
        host = cliques[rng.randrange(len(cliques))]
        for u in host:
            edges.add((u, v))
        for drop in range(w):
            cliques.append(tuple(x for i, x in enumerate(host) if i != drop) + (v,))
    kept = [e for e in sorted(edges) if rng.random() < q]
    return Graph(n, kept)
